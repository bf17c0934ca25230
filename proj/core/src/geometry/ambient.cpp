#include "frobcheck/geometry/ambient.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <tuple>

#include "frobcheck/errors.hpp"

namespace frobcheck {

namespace {

VariableSet build_variables(const std::vector<ProjectiveFactor>& factors) {
  if (factors.empty()) throw InvalidArgument("an ambient space needs at least one factor");
  std::vector<std::string> names;
  std::vector<std::vector<int>> weights;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const auto& f = factors[j];
    if (f.vars.size() != f.weights.size())
      throw InvalidArgument("factor " + std::to_string(j) + ": names and weights differ in length");
    if (f.vars.size() < 2)
      throw InvalidArgument("factor " + std::to_string(j) + " needs at least two variables");
    for (std::size_t i = 0; i < f.vars.size(); ++i) {
      if (f.weights[i] <= 0) throw InvalidArgument("ambient weights must be positive");
      names.push_back(f.vars[i]);
      std::vector<int> w(factors.size(), 0);
      w[j] = f.weights[i];
      weights.push_back(std::move(w));
    }
  }
  return VariableSet(std::move(names), std::move(weights));
}

std::string auto_name(std::size_t factor, std::size_t count, std::size_t i) {
  static constexpr std::string_view letters = "xyzuvwabcdeg";
  if (count == 1) return "x" + std::to_string(i);
  if (factor < letters.size()) return std::string(1, letters[factor]) + std::to_string(i);
  return "f" + std::to_string(factor) + "_" + std::to_string(i);
}

}  // namespace

AmbientSpace::AmbientSpace(std::vector<ProjectiveFactor> factors)
    : factors_(std::move(factors)), vars_(build_variables(factors_)) {
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    offsets_.push_back(factor_of_.size());
    for (std::size_t i = 0; i < factors_[j].vars.size(); ++i) factor_of_.push_back(j);
  }
}

AmbientSpace AmbientSpace::parse(std::string_view spec,
                                 const std::optional<std::vector<std::string>>& names) {
  std::vector<std::vector<int>> weight_lists;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
  };
  auto read_uint = [&]() -> int {
    skip_ws();
    const std::size_t start = i;
    long v = 0;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
      v = v * 10 + (spec[i] - '0');
      if (v > 1000000) throw ParseError("number too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected a number", start);
    return static_cast<int>(v);
  };

  while (true) {
    skip_ws();
    if (i >= spec.size() || spec[i] != 'P') throw ParseError("expected 'P'", i);
    ++i;
    skip_ws();
    std::vector<int> weights;
    if (i < spec.size() && spec[i] == '(') {
      ++i;
      weights.push_back(read_uint());
      skip_ws();
      while (i < spec.size() && spec[i] == ',') {
        ++i;
        weights.push_back(read_uint());
        skip_ws();
      }
      if (i >= spec.size() || spec[i] != ')') throw ParseError("expected ')'", i);
      ++i;
    } else {
      if (i < spec.size() && spec[i] == '^') ++i;
      const int n = read_uint();
      if (n < 1) throw ParseError("projective dimension must be positive", i);
      weights.assign(static_cast<std::size_t>(n) + 1, 1);
    }
    weight_lists.push_back(std::move(weights));
    skip_ws();
    if (i >= spec.size()) break;
    if (spec[i] != 'x') throw ParseError("expected 'x' between factors", i);
    ++i;
  }

  std::size_t total = 0;
  for (const auto& w : weight_lists) total += w.size();
  if (names && names->size() != total)
    throw InvalidArgument("ambient has " + std::to_string(total) + " variables but " +
                          std::to_string(names->size()) + " names were given");

  std::vector<ProjectiveFactor> factors;
  std::size_t k = 0;
  for (std::size_t j = 0; j < weight_lists.size(); ++j) {
    ProjectiveFactor f;
    f.weights = weight_lists[j];
    for (std::size_t v = 0; v < f.weights.size(); ++v)
      f.vars.push_back(names ? (*names)[k++] : auto_name(j, weight_lists.size(), v));
    factors.push_back(std::move(f));
  }
  return AmbientSpace(std::move(factors));
}

std::vector<std::size_t> AmbientSpace::factor_variables(std::size_t j) const {
  std::vector<std::size_t> out(factors_.at(j).vars.size());
  std::iota(out.begin(), out.end(), offsets_[j]);
  return out;
}

std::string AmbientSpace::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) s += " x ";
    s += "P(";
    for (std::size_t i = 0; i < factors_[j].weights.size(); ++i)
      s += (i ? "," : "") + std::to_string(factors_[j].weights[i]);
    s += ")";
  }
  return s;
}

std::vector<SingularStratum> ambient_singular_strata(const AmbientSpace& space) {
  std::vector<SingularStratum> out;
  for (std::size_t j = 0; j < space.factor_count(); ++j) {
    const auto& w = space.factors()[j].weights;
    const auto globals = space.factor_variables(j);
    const int wmax = *std::max_element(w.begin(), w.end());
    std::vector<std::vector<std::size_t>> subsets;
    for (int d = 2; d <= wmax; ++d) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] % d == 0) s.push_back(i);
      if (!s.empty() && std::find(subsets.begin(), subsets.end(), s) == subsets.end())
        subsets.push_back(std::move(s));
    }
    for (const auto& s : subsets) {
      const bool maximal = std::none_of(subsets.begin(), subsets.end(), [&](const auto& other) {
        return other.size() > s.size() && std::includes(other.begin(), other.end(), s.begin(), s.end());
      });
      if (!maximal) continue;
      int g = 0;
      std::vector<std::size_t> vars;
      for (auto i : s) {
        g = std::gcd(g, w[i]);
        vars.push_back(globals[i]);
      }
      out.push_back({j, std::move(vars), g});
    }
  }
  std::sort(out.begin(), out.end(), [](const SingularStratum& a, const SingularStratum& b) {
    return std::tie(a.factor, a.variables) < std::tie(b.factor, b.variables);
  });
  return out;
}

}  // namespace frobcheck
