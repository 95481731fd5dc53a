#include "cwl/moves.hpp"

#include <optional>
#include <sstream>

namespace cwl {

std::int64_t CrossingStep::lobe_a(int j) const {
  auto it = ka.find(j);
  return it == ka.end() ? 0 : it->second;
}

std::int64_t CrossingStep::lobe_b(const FramedLink& link, int j) const {
  return link.linking(component, j) - lobe_a(j);
}

CrossingStep CrossingStep::swapped_lobes(const FramedLink& link) const {
  CrossingStep out{component, l, {}};
  for (int j = 1; j <= link.size(); ++j) {
    if (j == component) continue;
    if (const std::int64_t b = lobe_b(link, j); b != 0) out.ka[j] = b;
  }
  return out;
}

namespace {

void check_step(const FramedLink& link, const CrossingStep& step) {
  if (step.component < 1 || step.component > link.size()) {
    throw DomainError("crossing component out of range");
  }
  for (const auto& [j, v] : step.ka) {
    if (j < 1 || j > link.size() || j == step.component) {
      throw DomainError("lobe linking index " + std::to_string(j) + " is invalid");
    }
  }
}

Rational sign_times_q(const FramedLink& link) {
  return Rational(BigInt(link.framing_denominator_product() * matrix_sign(surgery_matrix(link))));
}

}  // namespace

RatMatrix crossing_matrix(const FramedLink& link, const CrossingStep& step) {
  check_step(link, step);
  const int n = link.size();
  const int c = step.component;
  std::vector<int> order{c};
  for (int j = 1; j <= n; ++j)
    if (j != c) order.push_back(j);

  RatMatrix m(static_cast<std::size_t>(n));
  m(0, 0) = Rational(step.l);
  for (std::size_t a = 1; a < order.size(); ++a) {
    m(0, a) = Rational(step.lobe_a(order[a]));
    m(a, 0) = Rational(step.lobe_b(link, order[a]));
    for (std::size_t b = 1; b < order.size(); ++b) {
      m(a, b) = a == b ? link.framing(order[a]) : Rational(link.linking(order[a], order[b]));
    }
  }
  return m;
}

Rational lambda_delta(const FramedLink& link, const CrossingStep& step) {
  return sign_times_q(link) * det_exact(crossing_matrix(link, step));
}

Rational cw_delta(const FramedLink& link, const CrossingStep& step) {
  const Rational d = det_exact(surgery_matrix(link));
  if (d.is_zero()) throw DomainError("Casson-Walker invariant undefined: det(A) = 0");
  return Rational(2) * det_exact(crossing_matrix(link, step)) / d;
}

FramedLink a1_substitution(const FramedLink& link) {
  FramedLink out = link;
  for (int i = 1; i <= link.size(); ++i) {
    std::int64_t row = 0;
    for (int k = 1; k <= link.size(); ++k)
      if (k != i) row += link.linking(i, k);
    out.set_framing(i, Rational(-row));
  }
  return out;
}

std::int64_t a1_delta(const FramedLink& link, const CrossingStep& step) {
  const Rational d = det_exact(crossing_matrix(a1_substitution(link), step));
  if (!d.is_integer() || !d.num().fits_slong_p()) {
    throw std::logic_error("a1 difference is not a machine integer");
  }
  return d.num().get_si();
}

Rational path_delta(const HomotopyPath& path) {
  Rational total;
  for (const CrossingStep& step : path.steps) total += lambda_delta(path.link, step);
  return total;
}

HomotopyPath tn_path(std::int64_t n, const Rational& s) {
  if (n < 1) throw DomainError("T(n) needs n >= 1");
  FramedLink link({s, -s});
  link.set_linking(1, 2, n);
  HomotopyPath path{std::move(link), {}};
  for (std::int64_t i = 1; i < n; ++i) {
    path.steps.push_back(CrossingStep{1, 0, {{2, n - i}}});
  }
  return path;
}

Rational mirror_lambda(const HomotopyPath& path) {
  if (path.link.size() != 2) throw DomainError("mirror solver needs a two-component link");
  if (path.link.framing(2) != -path.link.framing(1)) {
    throw DomainError("mirror solver needs framings of the form (s, -s)");
  }
  return path_delta(path) / Rational(2);
}

HomotopyPath parse_path(std::string_view text) {
  std::optional<int> current;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> raw_steps;
  std::vector<int> step_component;

  auto extra = [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (tok[0] == "path") {
      if (tok.size() != 3 || tok[1] != "component") {
        throw ParseError(line, "expected 'path component <c>'");
      }
      BigInt c;
      try {
        c = parse_integer(tok[2]);
      } catch (const std::invalid_argument&) {
        throw ParseError(line, "malformed component index '" + std::string(tok[2]) + "'");
      }
      if (!c.fits_sint_p()) throw ParseError(line, "component index out of range");
      current = static_cast<int>(c.get_si());
      return true;
    }
    if (tok[0] == "step") {
      if (!current) throw ParseError(line, "'step' before 'path component'");
      if (tok.size() < 2) throw ParseError(line, "'step' needs the lobe linking number l");
      raw_steps.emplace_back(line, std::vector<std::string>(tok.begin() + 1, tok.end()));
      step_component.push_back(*current);
      return true;
    }
    return false;
  };

  HomotopyPath path{detail::parse_link_with(text, extra), {}};
  const int n = path.link.size();

  auto to_int64 = [](std::size_t line, const std::string& s) {
    try {
      const BigInt v = parse_integer(s);
      if (!v.fits_slong_p()) throw ParseError(line, "integer out of range '" + s + "'");
      return static_cast<std::int64_t>(v.get_si());
    } catch (const std::invalid_argument&) {
      throw ParseError(line, "malformed integer '" + s + "'");
    }
  };

  for (std::size_t k = 0; k < raw_steps.size(); ++k) {
    const auto& [line, args] = raw_steps[k];
    CrossingStep step;
    step.component = step_component[k];
    if (step.component < 1 || step.component > n) {
      throw ParseError(line, "path component " + std::to_string(step.component) +
                                 " out of range 1.." + std::to_string(n));
    }
    step.l = to_int64(line, args[0]);
    for (std::size_t a = 1; a < args.size(); ++a) {
      const auto colon = args[a].find(':');
      if (colon == std::string::npos) {
        throw ParseError(line, "expected j:ka_j, got '" + args[a] + "'");
      }
      const std::int64_t j = to_int64(line, args[a].substr(0, colon));
      if (j < 1 || j > n || j == step.component) {
        throw ParseError(line, "lobe index " + std::to_string(j) + " is invalid");
      }
      if (step.ka.contains(static_cast<int>(j))) {
        throw ParseError(line, "duplicate lobe index " + std::to_string(j));
      }
      step.ka[static_cast<int>(j)] = to_int64(line, args[a].substr(colon + 1));
    }
    path.steps.push_back(std::move(step));
  }
  return path;
}

std::string serialize_path(const HomotopyPath& path) {
  std::ostringstream out;
  out << serialize_link(path.link);
  int current = 0;
  for (const CrossingStep& step : path.steps) {
    if (step.component != current) {
      out << "path component " << step.component << '\n';
      current = step.component;
    }
    out << "step " << step.l;
    for (const auto& [j, v] : step.ka)
      if (v != 0) out << ' ' << j << ':' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace cwl
