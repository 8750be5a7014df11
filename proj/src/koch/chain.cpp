#include "koch/chain.hpp"

#include "koch/error.hpp"

#include <algorithm>
#include <numeric>

namespace koch {

Point map_left(const Point& p) {
  const Rational half(1, 2);
  return {(p.x - p.y - 1) * half, (-p.x - p.y - 1) * half};
}

Point map_right(const Point& p) {
  const Rational half(1, 2);
  return {(p.x + p.y + 1) * half, (p.x - p.y - 1) * half};
}

namespace {

Chain base_chain() {
  Chain c;
  c.s = 1;
  c.points = {{Rational(-1), Rational(0)},
              {Rational(0), Rational(-1)},
              {Rational(1), Rational(0)}};
  return c;
}

Chain next_level(const Chain& child, int exponent) {
  const Rational f = Rational::pow2(-exponent);
  Chain out;
  out.s = child.s + 1;
  out.flatten_exponents = child.flatten_exponents;
  out.flatten_exponents.push_back(exponent);
  out.points.reserve(2 * child.points.size() - 1);
  for (const auto& p : child.points) {
    out.points.push_back(map_left({p.x, p.y * f}));
  }
  // The first right image is (0,-1) again; it is already present as p_0.
  for (std::size_t i = 1; i < child.points.size(); ++i) {
    const auto& p = child.points[i];
    out.points.push_back(map_right({p.x, p.y * f}));
  }
  return out;
}

std::string describe_failure(const ChainValidity& v) {
  std::string out;
  auto flag = [&out](bool ok, const char* name) {
    if (!ok) out += (out.empty() ? "" : ", ") + std::string(name);
  };
  flag(v.x_monotone, "x_monotone");
  flag(v.general_position, "general_position");
  flag(v.upper_shadow_ok, "upper_shadow");
  flag(v.consecutive_edges_uncrossed, "consecutive_edges_uncrossed");
  return out;
}

}  // namespace

Chain generate_chain(int s, const GenerateOptions& options) {
  if (s < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "chain iteration s must be >= 1, got " + std::to_string(s));
  }
  if (options.override_exponents &&
      options.override_exponents->size() != static_cast<std::size_t>(s - 1)) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(s - 1) +
                    " flattening exponents for s=" + std::to_string(s) +
                    ", got " +
                    std::to_string(options.override_exponents->size()));
  }

  Chain chain = base_chain();
  for (int level = 2; level <= s; ++level) {
    if (options.override_exponents) {
      const int k = (*options.override_exponents)[level - 2];
      if (k < 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "flattening exponent must be >= 0");
      }
      Chain candidate = next_level(chain, k);
      const auto validity = validate_chain(candidate);
      if (!validity.valid()) {
        throw Error(ErrorCode::ChainInvalid,
                    "level " + std::to_string(level) + " with exponent " +
                        std::to_string(k) +
                        " fails: " + describe_failure(validity));
      }
      chain = std::move(candidate);
      continue;
    }

    bool accepted = false;
    for (int k = 1; k <= options.max_exponent; ++k) {
      Chain candidate = next_level(chain, k);
      if (validate_chain(candidate, {.max_witnesses_per_check = 0}).valid()) {
        chain = std::move(candidate);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw Error(ErrorCode::FlatteningDivergence,
                  "no flattening exponent up to " +
                      std::to_string(options.max_exponent) +
                      " is valid at level " + std::to_string(level));
    }
  }
  return chain;
}

std::vector<std::int8_t> orientation_table(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  mpz_class lcm = 1;
  for (const auto& p : points) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.x.denominator().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.y.denominator().get_mpz_t());
  }
  std::vector<mpz_class> xs(n);
  std::vector<mpz_class> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = points[i].x.numerator() * (lcm / points[i].x.denominator());
    ys[i] = points[i].y.numerator() * (lcm / points[i].y.denominator());
  }

  std::vector<std::int8_t> table(n * n * n, 0);
  mpz_class dx, dy, ex, ey, det;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dx = xs[j] - xs[i];
      dy = ys[j] - ys[i];
      for (std::size_t k = j + 1; k < n; ++k) {
        ex = xs[k] - xs[i];
        ey = ys[k] - ys[i];
        mpz_mul(det.get_mpz_t(), dx.get_mpz_t(), ey.get_mpz_t());
        mpz_submul(det.get_mpz_t(), dy.get_mpz_t(), ex.get_mpz_t());
        table[(i * n + j) * n + k] = static_cast<std::int8_t>(sgn(det));
      }
    }
  }
  return table;
}

namespace {

// Sign of the sorted triple times the parity of the sorting permutation.
int table_sign(const std::vector<std::int8_t>& table, std::size_t n,
               std::size_t i, std::size_t j, std::size_t k) {
  int parity = 1;
  if (i > j) { std::swap(i, j); parity = -parity; }
  if (j > k) { std::swap(j, k); parity = -parity; }
  if (i > j) { std::swap(i, j); parity = -parity; }
  return parity * table[(i * n + j) * n + k];
}

}  // namespace

ChainValidity validate_chain(const Chain& chain,
                             const ValidateOptions& options) {
  ChainValidity result;
  const auto& pts = chain.points;
  const std::size_t n = pts.size();
  const std::size_t cap = options.max_witnesses_per_check;
  auto witness = [&](const char* check, std::vector<std::int64_t> idx) {
    std::size_t already = 0;
    for (const auto& v : result.violations) {
      if (v.check == check) ++already;
    }
    if (already < cap) result.violations.push_back({check, std::move(idx)});
  };
  auto li = [&](std::size_t pos) { return chain.logical_index(pos); };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(pts[i].x < pts[i + 1].x)) {
      result.x_monotone = false;
      witness("x_monotone", {li(i), li(i + 1)});
    }
  }

  const auto table = orientation_table(pts);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (table[(i * n + j) * n + k] == 0) {
          result.general_position = false;
          witness("general_position", {li(i), li(j), li(k)});
        }
      }
    }
  }

  // Rank of each x-coordinate so the closed x-range test is integer work.
  std::vector<std::size_t> by_x(n);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::stable_sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].x < pts[b].x;
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t p = by_x[r];
    rank[p] = (r > 0 && pts[p].x == pts[by_x[r - 1]].x) ? rank[by_x[r - 1]] : r;
  }

  const std::int64_t hw = chain.half_width();
  for (std::int64_t lu = -hw; lu < 0; ++lu) {
    for (std::int64_t lv = 1; lv <= hw; ++lv) {
      std::size_t u = chain.position(lu);
      std::size_t v = chain.position(lv);
      if (rank[u] == rank[v]) continue;
      if (rank[u] > rank[v]) std::swap(u, v);
      for (std::size_t w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (rank[w] < rank[u] || rank[w] > rank[v]) continue;
        if (table_sign(table, n, u, v, w) > 0) {
          result.upper_shadow_ok = false;
          witness("upper_shadow", {lu, lv, li(w)});
        }
      }
    }
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t a = i;
    const std::size_t b = i + 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == a || j == b) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (k == a || k == b) continue;
        if (table_sign(table, n, j, k, a) * table_sign(table, n, j, k, b) < 0 &&
            table_sign(table, n, a, b, j) * table_sign(table, n, a, b, k) < 0) {
          result.consecutive_edges_uncrossed = false;
          witness("consecutive_edges_uncrossed", {li(a), li(b), li(j), li(k)});
        }
      }
    }
  }
  return result;
}

int Chirotope::sign(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= n_ || j >= n_ || k >= n_ || i == j || j == k || i == k) {
    throw Error(ErrorCode::InvalidArgument, "chirotope needs three distinct indices");
  }
  return table_sign(table_, n_, i, j, k);
}

int Chirotope::at(std::int64_t i, std::int64_t j, std::int64_t k) const {
  const auto hw = static_cast<std::int64_t>(n_ / 2);
  return sign(static_cast<std::size_t>(i + hw), static_cast<std::size_t>(j + hw),
              static_cast<std::size_t>(k + hw));
}

Chirotope chirotope(const Chain& chain) {
  const std::size_t n = chain.points.size();
  auto table = orientation_table(chain.points);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (table[(i * n + j) * n + k] == 0) {
          throw Error(ErrorCode::DegenerateTriple,
                      "collinear triple (" +
                          std::to_string(chain.logical_index(i)) + "," +
                          std::to_string(chain.logical_index(j)) + "," +
                          std::to_string(chain.logical_index(k)) + ")");
        }
      }
    }
  }
  return Chirotope(chain.s, n, std::move(table));
}

}  // namespace koch
