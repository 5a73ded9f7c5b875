#include "toricham/fourier_motzkin.hpp"

#include "toricham/error.hpp"

#include <map>
#include <utility>

namespace toricham {
namespace {

struct Bound {
  Rational value;
  bool strict = false;
  bool present = false;
};

// Keeps only the tightest constraint per normalized coefficient vector.
// Returns false when a constant constraint is violated.
bool add_normalized(std::map<RatVector, std::pair<Rational, bool>>& pool, LinearConstraint c) {
  std::size_t lead = 0;
  while (lead < c.coeffs.size() && c.coeffs[lead].is_zero()) ++lead;
  if (lead == c.coeffs.size()) {
    return c.strict ? c.constant.sign() > 0 : c.constant.sign() >= 0;
  }
  const Rational scale = Rational(1) / abs(c.coeffs[lead]);
  for (auto& a : c.coeffs) a *= scale;
  c.constant *= scale;
  auto [it, inserted] = pool.try_emplace(std::move(c.coeffs), c.constant, c.strict);
  if (!inserted) {
    auto& [constant, strict] = it->second;
    if (c.constant < constant || (c.constant == constant && c.strict)) {
      constant = c.constant;
      strict = c.strict;
    }
  }
  return true;
}

std::vector<LinearConstraint> drain(std::map<RatVector, std::pair<Rational, bool>>& pool) {
  std::vector<LinearConstraint> out;
  out.reserve(pool.size());
  for (auto& [coeffs, rest] : pool) out.push_back({coeffs, rest.first, rest.second});
  pool.clear();
  return out;
}

void tighten_lower(Bound& b, const Rational& v, bool strict) {
  if (!b.present || v > b.value) {
    b = {v, strict, true};
  } else if (v == b.value) {
    b.strict = b.strict || strict;
  }
}

void tighten_upper(Bound& b, const Rational& v, bool strict) {
  if (!b.present || v < b.value) {
    b = {v, strict, true};
  } else if (v == b.value) {
    b.strict = b.strict || strict;
  }
}

}  // namespace

std::optional<RatVector> find_feasible_point(std::vector<LinearConstraint> system, std::size_t dim) {
  std::map<RatVector, std::pair<Rational, bool>> pool;
  for (auto& c : system) {
    if (c.coeffs.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "constraint length does not match dimension");
    }
    if (!add_normalized(pool, std::move(c))) return std::nullopt;
  }

  // stages[k] only involves variables 0..k-1 (stages[dim] is the input).
  std::vector<std::vector<LinearConstraint>> stages(dim + 1);
  stages[dim] = drain(pool);
  for (std::size_t k = dim; k-- > 0;) {
    const auto& current = stages[k + 1];
    std::vector<const LinearConstraint*> pos, neg;
    for (const auto& c : current) {
      const int s = c.coeffs[k].sign();
      if (s > 0) {
        pos.push_back(&c);
      } else if (s < 0) {
        neg.push_back(&c);
      } else if (!add_normalized(pool, c)) {
        return std::nullopt;
      }
    }
    for (const auto* p : pos) {
      for (const auto* n : neg) {
        const Rational wp = -n->coeffs[k];
        const Rational wn = p->coeffs[k];
        LinearConstraint combo{RatVector(dim), wp * p->constant + wn * n->constant,
                               p->strict || n->strict};
        for (std::size_t j = 0; j < k; ++j) combo.coeffs[j] = wp * p->coeffs[j] + wn * n->coeffs[j];
        if (!add_normalized(pool, std::move(combo))) return std::nullopt;
      }
    }
    stages[k] = drain(pool);
  }

  RatVector x(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    Bound lower, upper;
    for (const auto& c : stages[k + 1]) {
      const Rational& a = c.coeffs[k];
      if (a.is_zero()) continue;
      Rational rest = c.constant;
      for (std::size_t j = 0; j < k; ++j) rest += c.coeffs[j] * x[j];
      const Rational bound = -rest / a;
      if (a.sign() > 0) {
        tighten_lower(lower, bound, c.strict);
      } else {
        tighten_upper(upper, bound, c.strict);
      }
    }
    if (lower.present && upper.present) {
      x[k] = lower.value == upper.value ? lower.value : (lower.value + upper.value) / Rational(2);
    } else if (lower.present) {
      x[k] = lower.strict ? lower.value + Rational(1) : lower.value;
    } else if (upper.present) {
      x[k] = upper.strict ? upper.value - Rational(1) : upper.value;
    }
  }
  return x;
}

}  // namespace toricham
