#include "fblow/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "fblow/enumerate.hpp"

namespace fblow {

Int checked_pow(Int base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

LatticeVector LatticeVector::primitive() const {
  Int g = 0;
  for (Int c : coords_) g = std::gcd(g, c);
  if (g <= 1) return *this;
  LatticeVector r = *this;
  for (Int& c : r.coords_) c /= g;
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], o.coords_[i]);
  return *this;
}

LatticeVector operator-(const LatticeVector& a) {
  LatticeVector r = a;
  for (Int& c : r.coords_) c = checked_sub(0, c);
  return r;
}

LatticeVector operator*(Int k, const LatticeVector& a) {
  LatticeVector r = a;
  for (Int& c : r.coords_) c = checked_mul(k, c);
  return r;
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  if (v.dim() == 1) return os << v[0];
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Int c : v.coords()) {
    h ^= std::hash<Int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

AffineMonoid::AffineMonoid(std::size_t dim, std::vector<LatticeVector> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ == 0) throw ValidationError("dimension must be at least 1");
  if (generators_.empty()) throw ValidationError("monoid needs at least one generator");
  for (const auto& g : generators_) {
    if (g.dim() != dim_)
      throw ValidationError("generator " + to_string(g) + " has dimension " + std::to_string(g.dim()) +
                            ", expected " + std::to_string(dim_));
    if (g.is_zero()) throw ValidationError("zero generator");
  }
}

AffineMonoid AffineMonoid::numerical(std::initializer_list<Int> gens) {
  std::vector<LatticeVector> v;
  for (Int g : gens) v.push_back(LatticeVector{g});
  return AffineMonoid(1, std::move(v));
}

bool RationalCone::contains(const LatticeVector& u) const {
  return std::all_of(halfspaces.begin(), halfspaces.end(), [&](const auto& h) { return dot(h, u) >= 0; });
}

bool RationalCone::strictly_contains(const LatticeVector& u) const {
  return std::all_of(halfspaces.begin(), halfspaces.end(), [&](const auto& h) { return dot(h, u) > 0; });
}

bool RationalCone::subset_of(const RationalCone& other) const {
  return std::all_of(rays.begin(), rays.end(), [&](const auto& r) { return other.contains(r); });
}

// ---------------------------------------------------------------------------
// Hermite reduction

namespace {

using MpzRow = std::vector<mpz_class>;

// Row-echelon form over Z by unimodular row operations; returns the rank and
// leaves the pivots on the leading diagonal of the first rank rows.
std::size_t integer_echelon(std::vector<MpzRow>& rows, std::size_t dim) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    // Euclid on column col among rows rank..end.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[rank], rows[best]);
      bool others = false;
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), rows[r][col].get_mpz_t(), rows[rank][col].get_mpz_t());
        for (std::size_t c = col; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
        if (rows[r][col] != 0) others = true;
      }
      if (!others) {
        ++rank;
        break;
      }
    }
  }
  return rank;
}

}  // namespace

Int lattice_index(std::size_t dim, std::span<const LatticeVector> vectors) {
  std::vector<MpzRow> rows;
  for (const auto& v : vectors) {
    MpzRow row(dim);
    for (std::size_t i = 0; i < dim; ++i) row[i] = static_cast<long>(v[i]);
    rows.push_back(std::move(row));
  }
  if (integer_echelon(rows, dim) < dim) return 0;
  mpz_class det = 1;
  for (std::size_t i = 0; i < dim; ++i) det *= rows[i][i];
  det = abs(det);
  if (!det.fits_slong_p()) throw ArithmeticOverflow();
  return det.get_si();
}

bool group_generates(std::size_t dim, std::span<const LatticeVector> vectors) {
  return lattice_index(dim, vectors) == 1;
}

bool group_generates(const AffineMonoid& A) { return group_generates(A.dim(), A.generators()); }

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

struct Inequality {  // a . x >= b
  std::vector<mpq_class> a;
  mpq_class b;
};

// Scales so the first nonzero coefficient has absolute value one.
void normalize(Inequality& ineq) {
  for (const auto& c : ineq.a) {
    if (c == 0) continue;
    mpq_class s = abs(c);
    for (auto& x : ineq.a) x /= s;
    ineq.b /= s;
    return;
  }
}

std::vector<Inequality> dedupe(std::vector<Inequality> system) {
  std::map<std::vector<mpq_class>, mpq_class> tightest;
  for (auto& ineq : system) {
    normalize(ineq);
    auto [it, inserted] = tightest.emplace(ineq.a, ineq.b);
    if (!inserted && ineq.b > it->second) it->second = ineq.b;
  }
  std::vector<Inequality> out;
  for (auto& [a, b] : tightest) out.push_back({a, b});
  return out;
}

std::vector<Inequality> eliminate(const std::vector<Inequality>& system, std::size_t var) {
  std::vector<Inequality> out, lower, upper;
  for (const auto& ineq : system) {
    if (ineq.a[var] > 0)
      lower.push_back(ineq);
    else if (ineq.a[var] < 0)
      upper.push_back(ineq);
    else
      out.push_back(ineq);
  }
  for (const auto& lo : lower) {
    for (const auto& up : upper) {
      mpq_class s = lo.a[var], t = -up.a[var];
      Inequality c;
      c.a.resize(lo.a.size());
      for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] = t * lo.a[i] + s * up.a[i];
      c.a[var] = 0;
      c.b = t * lo.b + s * up.b;
      out.push_back(std::move(c));
    }
  }
  return dedupe(std::move(out));
}

}  // namespace

std::optional<LatticeVector> positive_covector(std::size_t dim, std::span<const LatticeVector> vectors) {
  std::vector<std::vector<Inequality>> stages;
  std::vector<Inequality> initial;
  for (const auto& v : vectors) {
    Inequality ineq;
    for (std::size_t i = 0; i < dim; ++i) ineq.a.emplace_back(static_cast<long>(v[i]));
    ineq.b = 1;
    initial.push_back(std::move(ineq));
  }
  stages.push_back(dedupe(std::move(initial)));
  for (std::size_t k = dim; k-- > 0;) stages.push_back(eliminate(stages.back(), k));
  for (const auto& ineq : stages.back())
    if (ineq.b > 0) return std::nullopt;

  // Back-substitute: stages[dim - 1 - v] constrains variables 0..v.
  std::vector<mpq_class> x(dim, 0);
  for (std::size_t v = 0; v < dim; ++v) {
    std::optional<mpq_class> lo, hi;
    for (const auto& ineq : stages[dim - 1 - v]) {
      if (ineq.a[v] == 0) continue;
      mpq_class rest = ineq.b;
      for (std::size_t i = 0; i < v; ++i) rest -= ineq.a[i] * x[i];
      mpq_class bound = rest / ineq.a[v];
      if (ineq.a[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    x[v] = lo ? *lo : (hi ? *hi : mpq_class(0));
  }
  mpz_class denominator_lcm = 1;
  for (auto& c : x) {
    c.canonicalize();
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Int> coords;
  for (const auto& c : x) {
    mpz_class n = c.get_num() * (denominator_lcm / c.get_den());
    if (!n.fits_slong_p()) throw ArithmeticOverflow();
    coords.push_back(n.get_si());
  }
  return LatticeVector(std::move(coords)).primitive();
}

bool is_pointed(const AffineMonoid& A) { return positive_covector(A.dim(), A.generators()).has_value(); }

void validate_standing_assumptions(const AffineMonoid& A) {
  if (!group_generates(A)) throw NotGroupGenerating();
  if (!is_pointed(A)) throw NotPointed();
}

// ---------------------------------------------------------------------------
// Cones

namespace {

// Extreme rays of the pointed full-dimensional cone {x : <n, x> >= 0 for all
// normals n}. Each ray is cut out by dim - 1 independent normals, so for
// d <= 3 the candidates are the perpendiculars / cross products.
std::vector<LatticeVector> rays_of_inequalities(std::size_t dim, std::span<const LatticeVector> normals) {
  std::vector<LatticeVector> candidates;
  if (dim == 1) {
    candidates = {LatticeVector{1}, LatticeVector{-1}};
  } else if (dim == 2) {
    for (const auto& n : normals) candidates.push_back(LatticeVector{-n[1], n[0]});
  } else if (dim == 3) {
    for (std::size_t i = 0; i < normals.size(); ++i) {
      for (std::size_t j = i + 1; j < normals.size(); ++j) {
        const auto& a = normals[i];
        const auto& b = normals[j];
        LatticeVector c{checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
                        checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
                        checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
        if (!c.is_zero()) candidates.push_back(c);
      }
    }
  } else {
    throw DimensionUnsupported("cone computations are implemented for d <= 3, got d = " +
                               std::to_string(dim));
  }
  std::vector<LatticeVector> rays;
  for (const auto& c : candidates) {
    for (const auto& signed_c : {c, -c}) {
      bool ok = std::all_of(normals.begin(), normals.end(), [&](const auto& n) { return dot(n, signed_c) >= 0; });
      if (ok) rays.push_back(signed_c.primitive());
    }
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

}  // namespace

RationalCone dual_cone(const AffineMonoid& A) {
  if (A.dim() > 3)
    throw DimensionUnsupported("dual cone is implemented for d <= 3, got d = " + std::to_string(A.dim()));
  RationalCone cone;
  cone.rays = rays_of_inequalities(A.dim(), A.generators());
  // Facets of the dual cone are the extreme rays of A_R.
  cone.halfspaces = rays_of_inequalities(A.dim(), cone.rays);
  return cone;
}

RationalCone monoid_cone(const AffineMonoid& A) {
  RationalCone dual = dual_cone(A);
  return RationalCone{dual.halfspaces, dual.rays};
}

Weight interior_weight(const AffineMonoid& A) {
  if (A.dim() > 3) {
    auto w = positive_covector(A.dim(), A.generators());
    if (!w) throw NotPointed();
    return Weight{*w};
  }
  RationalCone dual = dual_cone(A);
  LatticeVector w = LatticeVector::zero(A.dim());
  for (const auto& r : dual.rays) w += r;
  return Weight{w};
}

bool monoid_contains(const AffineMonoid& A, const LatticeVector& target) {
  if (target.is_zero()) return true;
  Weight w0 = interior_weight(A);
  if (dot(target, w0.covector) <= 0) return false;
  GradedEnumerator en(A.generators(), w0.covector);
  return en.contains(target);
}

std::vector<LatticeVector> minimal_generating_set(std::span<const LatticeVector> vectors,
                                                  const LatticeVector& weight) {
  struct Entry {
    Int w;
    LatticeVector v;
    auto operator<=>(const Entry&) const = default;
  };
  std::vector<Entry> sorted;
  for (const auto& v : vectors) {
    Int w = dot(v, weight);
    if (w <= 0) throw NotPointed();
    sorted.push_back({w, v});
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) return {};
  const Int max_weight = sorted.back().w;

  // reachable = elements of the monoid of kept generators with weight <= max.
  std::unordered_set<LatticeVector, LatticeVectorHash> reachable;
  std::vector<Entry> reachable_list;
  reachable.insert(LatticeVector::zero(weight.dim()));
  reachable_list.push_back({0, LatticeVector::zero(weight.dim())});

  std::vector<LatticeVector> kept;
  for (const auto& [w, g] : sorted) {
    if (reachable.contains(g)) continue;
    kept.push_back(g);
    const std::size_t old_size = reachable_list.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      Entry cur = reachable_list[i];
      for (;;) {
        cur.w += w;
        if (cur.w > max_weight) break;
        cur.v += g;
        if (reachable.insert(cur.v).second) reachable_list.push_back(cur);
      }
    }
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Saturation

namespace {

Int det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return checked_add(checked_sub(checked_mul(a[0], checked_sub(checked_mul(b[1], c[2]), checked_mul(b[2], c[1]))),
                                 checked_mul(a[1], checked_sub(checked_mul(b[0], c[2]), checked_mul(b[2], c[0])))),
                     checked_mul(a[2], checked_sub(checked_mul(b[0], c[1]), checked_mul(b[1], c[0]))));
}

Int det(std::span<const LatticeVector> cols) {
  switch (cols.size()) {
    case 1:
      return cols[0][0];
    case 2:
      return checked_sub(checked_mul(cols[0][0], cols[1][1]), checked_mul(cols[0][1], cols[1][0]));
    case 3:
      return det3(cols[0], cols[1], cols[2]);
  }
  throw DimensionUnsupported("determinant for d > 3");
}

// Lattice points x = sum lambda_i r_i with 0 <= lambda_i < 1 (Cramer's rule).
void collect_parallelepiped(std::span<const LatticeVector> basis, std::vector<LatticeVector>& out) {
  const std::size_t d = basis.size();
  Int D = det(basis);
  if (D == 0) return;
  std::vector<Int> lo(d, 0), hi(d, 0);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    LatticeVector corner = LatticeVector::zero(d);
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (1u << i)) corner += basis[i];
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], corner[k]);
      hi[k] = std::max(hi[k], corner[k]);
    }
  }
  LatticeVector x(lo);
  std::vector<LatticeVector> cols(basis.begin(), basis.end());
  for (;;) {
    bool inside = !x.is_zero();
    for (std::size_t i = 0; i < d && inside; ++i) {
      LatticeVector saved = cols[i];
      cols[i] = x;
      Int num = det(cols);
      cols[i] = saved;
      // lambda_i = num / D must lie in [0, 1).
      if (D > 0 ? (num < 0 || num >= D) : (num > 0 || num <= D)) inside = false;
    }
    if (inside) out.push_back(x);
    std::size_t k = 0;
    while (k < d && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == d) break;
    ++x[k];
  }
}

}  // namespace

SaturationResult saturation(const AffineMonoid& A) {
  validate_standing_assumptions(A);
  const std::size_t d = A.dim();
  if (d == 1) {
    Int sign = A.generators().front()[0] > 0 ? 1 : -1;
    return {AffineMonoid(1, {LatticeVector{sign}}), true};
  }
  RationalCone cone = monoid_cone(A);
  std::vector<LatticeVector> candidates = cone.rays;
  const auto& rays = cone.rays;
  // Every d-subset of independent extreme rays spans a simplicial subcone;
  // together they cover the cone.
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = rays.size();
  for (;;) {
    std::vector<LatticeVector> basis;
    for (auto i : idx) basis.push_back(rays[i]);
    collect_parallelepiped(basis, candidates);
    std::size_t k = d;
    while (k-- > 0 && idx[k] == n - d + k) {
    }
    if (k == static_cast<std::size_t>(-1)) break;
    ++idx[k];
    for (std::size_t j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  Weight w = interior_weight(A);
  return {AffineMonoid(d, minimal_generating_set(candidates, w.covector)), true};
}

Int conductor(const AffineMonoid& A) {
  if (A.dim() != 1) throw DimensionUnsupported("conductor is defined for d = 1");
  validate_standing_assumptions(A);
  std::vector<Int> values;
  for (const auto& g : A.generators()) values.push_back(g[0] < 0 ? -g[0] : g[0]);
  const Int smallest = *std::min_element(values.begin(), values.end());
  std::vector<char> member{1};
  Int run = 1;
  for (Int n = 1;; ++n) {
    bool in = false;
    for (Int v : values)
      if (v <= n && member[static_cast<std::size_t>(n - v)]) {
        in = true;
        break;
      }
    member.push_back(in);
    run = in ? run + 1 : 0;
    if (run >= smallest) return n - run + 1;
  }
}

}  // namespace fblow
