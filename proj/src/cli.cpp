#include "cwl/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "cwl/dedekind.hpp"
#include "cwl/lens.hpp"
#include "cwl/lescop.hpp"
#include "cwl/moves.hpp"

namespace cwl {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BigInt integer_arg(const std::string& name, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(name + ": malformed integer '" + text + "'");
  }
}

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

// Link files may carry a trailing path block; lambda/walker/h1 ignore it.
FramedLink load_link(const std::string& path) { return parse_path(read_file(path)).link; }

void warn_defaults(const FramedLink& link, std::ostream& err) {
  if (link.size() > kLambdaWarnComponents) {
    err << "warning: " << link.size() << " components; the surgery formula costs O(3^n)\n";
  }
  const auto keys = link.defaulted_a1_keys();
  if (keys.empty()) return;
  err << "warning: a1 defaulted to 0 for sublinks:";
  for (SubsetIndex I : keys) err << " {" << I.to_string() << '}';
  err << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casson-Walker-Lescop invariant of surgery on framed links", "cwl"};
  app.require_subcommand(1, 1);

  std::string file;
  std::string p_text, q_text, n_text, s_text, tail_text;
  std::vector<std::string> coeff_texts;
  int max_r = 50, max_nb = 8;

  auto* lambda_cmd = app.add_subcommand("lambda", "lambda of the surgered manifold");
  auto* walker_cmd = app.add_subcommand("walker", "Casson-Walker invariant 2 lambda/|H_1|");
  auto* h1_cmd = app.add_subcommand("h1", "order of H_1 (0 when infinite)");
  auto* delta_cmd = app.add_subcommand("delta", "crossing-change deltas along a path file");
  for (auto* cmd : {lambda_cmd, walker_cmd, h1_cmd, delta_cmd}) {
    cmd->add_option("FILE", file, ".lnk file")->required();
  }

  auto* dedekind_cmd = app.add_subcommand("dedekind", "Dedekind sum s(P, Q)");
  dedekind_cmd->add_option("P", p_text)->required();
  dedekind_cmd->add_option("Q", q_text)->required();

  auto* lens_cmd = app.add_subcommand("lens", "lambda(L(P, Q))");
  lens_cmd->add_option("P", p_text)->required();
  lens_cmd->add_option("Q", q_text)->required();

  auto* chain_cmd = app.add_subcommand("chain", "lens space of a surgery chain");
  chain_cmd->add_option("COEFFS", coeff_texts, "integer framings a1 a2 ...")->required();
  chain_cmd->add_option("--tail", tail_text, "rational tail P/Q subtracted from the last term");

  auto* tn_cmd = app.add_subcommand("tn", "lambda of T(N) with framings (S, -S)");
  tn_cmd->add_option("N", n_text)->required();
  tn_cmd->add_option("S", s_text)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the closed-form verification sweeps");
  verify_cmd->add_option("--max-r", max_r, "bound on r for the L(r^2+1, r) families");
  verify_cmd->add_option("--max-nb", max_nb, "bound on n and b for the T(n) families");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cwl: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (lambda_cmd->parsed()) {
      const FramedLink link = load_link(file);
      warn_defaults(link, err);
      out << lescop_lambda(link) << '\n';
    } else if (walker_cmd->parsed()) {
      out << walker_lambda(load_link(file)) << '\n';
    } else if (h1_cmd->parsed()) {
      out << h1_order(load_link(file)).get_str() << '\n';
    } else if (delta_cmd->parsed()) {
      const HomotopyPath path = parse_path(read_file(file));
      Rational total;
      for (std::size_t k = 0; k < path.steps.size(); ++k) {
        const Rational d = lambda_delta(path.link, path.steps[k]);
        out << "step " << k + 1 << ": " << d << '\n';
        total += d;
      }
      out << "total: " << total << '\n';
    } else if (dedekind_cmd->parsed()) {
      const BigInt q = integer_arg("Q", q_text);
      if (q < 1) throw UsageError("Q must be >= 1");
      out << dedekind_fast(integer_arg("P", p_text), q) << '\n';
    } else if (lens_cmd->parsed()) {
      const LensSpace L(integer_arg("P", p_text), integer_arg("Q", q_text));
      out << lens_lambda(L) << '\n';
    } else if (chain_cmd->parsed()) {
      ChainPresentation chain;
      for (const std::string& t : coeff_texts) chain.coeffs.push_back(integer_arg("COEFF", t));
      if (!tail_text.empty()) chain.tail = rational_arg("--tail", tail_text);
      const auto [p, q] = chain_to_lens(chain);
      out << "L(" << p.get_str() << "," << q.get_str() << ")\n";
    } else if (tn_cmd->parsed()) {
      const BigInt n = integer_arg("N", n_text);
      if (n < 1 || !n.fits_slong_p()) throw UsageError("N must be a positive integer");
      out << mirror_lambda(tn_path(n.get_si(), rational_arg("S", s_text))) << '\n';
    } else if (verify_cmd->parsed()) {
      const VerifyReport report = verify_sweeps(max_r, max_nb);
      out << report.to_string();
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << "cwl: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "cwl: " << file << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "cwl: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace cwl
