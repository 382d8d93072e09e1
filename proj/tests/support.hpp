#pragma once

// Shared test helpers: independent oracles (no use of the library's
// elimination or closure code), a seeded RNG and the coaction corpus.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hopfkit/catalog.hpp"
#include "hopfkit/reduction.hpp"

namespace testsupport {

using namespace hopfkit;

// ---------------------------------------------------------------------------
// Rank oracles

/// Fraction-free (Bareiss) elimination over Z after clearing denominators row
/// by row; modular elimination with 64-bit integers over F_p.
inline std::size_t oracle_rank(const std::vector<Vector>& rows, const Field& f) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  if (f.is_rational()) {
    std::vector<std::vector<mpz_class>> m;
    for (const auto& r : rows) {
      mpz_class l = 1;
      for (const auto& s : r) l = lcm(l, mpz_class(s.rational()->get_den()));
      std::vector<mpz_class> ir;
      for (const auto& s : r) ir.push_back(mpz_class(*s.rational() * l));
      m.push_back(std::move(ir));
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
      std::size_t p = rank;
      while (p < m.size() && m[p][c] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[rank]);
      for (std::size_t r = rank + 1; r < m.size(); ++r) {
        for (std::size_t k = c + 1; k < n; ++k) {
          mpz_class v = m[rank][c] * m[r][k] - m[r][c] * m[rank][k];
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          m[r][k] = v;
        }
        m[r][c] = 0;
      }
      prev = m[rank][c];
      ++rank;
    }
    return rank;
  }
  const std::uint64_t p = f.characteristic();
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> ir;
    for (const auto& s : r) ir.push_back(std::stoull(s.to_string()) % p);
    m.push_back(std::move(ir));
  }
  auto pw = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = pw(m[rank][c], p - 2);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const std::uint64_t factor = m[r][c] * inv % p;
      for (std::size_t k = c; k < n; ++k) m[r][k] = (m[r][k] + (p - factor) * m[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

inline std::size_t oracle_rank(const Matrix& m) { return oracle_rank(rows_of(m), m.field()); }

inline std::vector<Vector> concat(std::vector<Vector> a, const std::vector<Vector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// span(a) == span(b) by three rank computations.
inline bool oracle_same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, const Field& f) {
  const auto ra = oracle_rank(a, f), rb = oracle_rank(b, f);
  return ra == rb && oracle_rank(concat(a, b), f) == ra;
}

/// span(a) inside span(b).
inline bool oracle_contained(const std::vector<Vector>& a, const std::vector<Vector>& b, const Field& f) {
  return oracle_rank(concat(b, a), f) == oracle_rank(b, f);
}

// ---------------------------------------------------------------------------
// Group oracles

/// Brute-force closure: keep multiplying everything found so far.
inline std::set<std::size_t> oracle_subgroup(const FiniteGroupTable& g, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> s{g.identity};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::size_t> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur) grew |= s.insert(g.table[a][b]).second;
  }
  return s;
}

inline std::vector<Vector> group_span(const Field& f, std::size_t order, const std::set<std::size_t>& elems) {
  std::vector<Vector> out;
  for (auto e : elems) out.push_back(unit_vector(f, order, e));
  return out;
}

/// Growing echelon basis; insert() reports whether the vector was new.
struct EchelonBasis {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  bool insert(Vector v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]].is_zero()) continue;
      const Scalar c = v[pivots[r]] / rows[r][pivots[r]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[r][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        rows.push_back(std::move(v));
        pivots.push_back(j);
        return true;
      }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Bimodule closure oracle: naive sweep until no basis product leaves the span.

inline std::vector<Vector> oracle_bimodule_closure(const Algebra& a, std::vector<Vector> gens) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  const Matrix id = Matrix::identity(f, d);
  for (bool grew = true; grew;) {
    grew = false;
    const auto cur = gens;
    for (const auto& v : cur) {
      for (std::size_t i = 0; i < d; ++i) {
        const Vector e = unit_vector(f, d, i);
        const Vector l = kron(a.left_multiplication(e), id) * v;
        const Vector r = kron(id, a.right_multiplication(e)) * v;
        for (const auto& w : {l, r}) {
          if (oracle_contained({w}, gens, f)) continue;
          gens.push_back(w);
          grew = true;
        }
      }
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Randomness (fixed seeds everywhere)

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(engine); }
  Scalar scalar(const Field& f) {
    if (!f.is_rational()) return f.from_int(uniform(0, f.characteristic() - 1));
    return f.from_fraction(uniform(-3, 3), uniform(1, 3));
  }
  Vector vector(const Field& f, std::size_t n) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f));
    return v;
  }
  Matrix matrix(const Field& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar(f);
    return m;
  }
  Matrix invertible(const Field& f, std::size_t n) {
    for (;;) {
      Matrix m = matrix(f, n, n);
      if (oracle_rank(m) == n) return m;
    }
  }
  /// Permutation times a unitriangular matrix with a few small integer
  /// entries and a random diagonal scaling: keeps transported structure
  /// constants small.
  Matrix mild_invertible(const Field& f, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), engine);
    Matrix u = Matrix::identity(f, n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto i = uniform(0, n - 1), j = uniform(0, n - 1);
      if (i < j) u(i, j) = f.from_int(uniform(-2, 2));
    }
    Matrix p(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      Scalar s = f.from_int(uniform(1, 3) * (uniform(0, 1) ? 1 : -1));
      if (s.is_zero()) s = f.one();
      p(perm[i], i) = s;
    }
    return p * u;
  }
};

inline std::vector<std::string> relabel(const std::vector<std::string>& names, const std::string& suffix) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(n + suffix);
  return out;
}

// ---------------------------------------------------------------------------
// Small algebras

/// Basis 1, x_1, ..., x_r with every product x_i x_j = 0; any degree
/// assignment on the x_i is a multiplicative grading.
inline Algebra square_zero_algebra(const Field& f, std::size_t r) {
  std::vector<std::string> names{"1"};
  std::vector<Entry3> mult{{0, 0, 0, f.one()}};
  for (std::size_t i = 1; i <= r; ++i) {
    names.push_back("x" + std::to_string(i));
    mult.push_back({0, i, i, f.one()});
    mult.push_back({i, 0, i, f.one()});
  }
  return Algebra(f, names, mult, unit_vector(f, r + 1, 0));
}

/// Counit-like augmentation e_0 -> 1, everything else -> 0 (valid for
/// truncated polynomials and square-zero algebras).
inline Vector first_coordinate(const Field& f, std::size_t n) { return unit_vector(f, n, 0); }

/// B (x) H with delta = id (x) Delta: a trivial bundle over H with fibre
/// algebra B = k[y]/(y^2).
inline Coaction trivial_bundle_coaction(const HopfAlgebra& h) {
  const Field& f = h.field();
  const Algebra b = truncated_polynomial(f, 2);
  const HopfAlgebra one = catalog_hopf("trivial", f);
  return tensor_coaction(trivial_coaction(b, one), regular_coaction(h));
}

struct NamedCoaction {
  std::string name;
  Coaction coaction;
  std::optional<Vector> augmentation;
};

inline std::vector<std::string> catalog_hopf_names() {
  return {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "K4", "S3", "fun(Z2)", "fun(S3)", "fun(K4)", "sweedler"};
}

/// Every Hopf algebra the acceptance criteria name, with display names.
inline std::vector<std::pair<std::string, HopfAlgebra>> catalog_hopfs() {
  const Field q = Field::rationals();
  std::vector<std::pair<std::string, HopfAlgebra>> out;
  for (const auto& n : catalog_hopf_names()) out.emplace_back(n, catalog_hopf(n, q));
  out.emplace_back("taft 2 3 2", taft(2, 3, 2));
  out.emplace_back("taft 3 7 2", taft(3, 7, 2));
  return out;
}

/// Coactions used across tests and the acceptance run.
inline std::vector<NamedCoaction> coaction_corpus() {
  const Field q = Field::rationals();
  std::vector<NamedCoaction> out;
  for (const auto& [name, h] : catalog_hopfs()) out.push_back({"regular " + name, regular_coaction(h), h.counit()});

  const auto z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4), z6 = cyclic_group(6);
  const auto s3 = catalog_group("S3"), k4 = catalog_group("K4");
  const HopfAlgebra qz2 = group_algebra(z2, q), qs3 = group_algebra(s3, q);

  out.push_back({"trivial poly2 over Z2", trivial_coaction(truncated_polynomial(q, 2), qz2), first_coordinate(q, 2)});
  out.push_back({"trivial poly3 over S3", trivial_coaction(truncated_polynomial(q, 3), qs3), first_coordinate(q, 3)});
  out.push_back({"graded x^2 over Z2", grading_coaction(truncated_polynomial(q, 2), z2, {0, 1}), first_coordinate(q, 2)});
  out.push_back({"Z6 deg 2 on x^3", grading_coaction(truncated_polynomial(q, 3), z6, {0, 2, 4}), first_coordinate(q, 3)});
  out.push_back({"Z6 deg 1 on x^2", grading_coaction(truncated_polynomial(q, 2), z6, {0, 1}), first_coordinate(q, 2)});
  out.push_back({"Z3 deg 1 on x^3", grading_coaction(truncated_polynomial(q, 3), z3, {0, 1, 2}), first_coordinate(q, 3)});
  out.push_back({"S3 square-zero (12),(123)",
                 grading_coaction(square_zero_algebra(q, 2), s3, {s3.identity, 1, 2}), first_coordinate(q, 3)});
  {
    const auto d4 = dihedral_group(4);
    out.push_back({"D4 square-zero", grading_coaction(square_zero_algebra(q, 2), d4, {d4.identity, 1, 2}),
                   first_coordinate(q, 3)});
  }
  {
    // Z2 acting on Q[Z2] through the first factor of Z2 x Z2.
    const auto zz = direct_product(z2, z2);
    const HopfAlgebra a = group_algebra(z2, q), h = group_algebra(zz, q);
    const Matrix iota = group_hom_matrix(z2, zz, {0, 2}, q);
    out.push_back({"Z2 into Z2xZ2", pushforward_coaction(regular_coaction(a), iota, h), a.counit()});
  }
  out.push_back({"Z4 onto Z2",
                 surjection_coaction(group_algebra(z4, q), group_hom_matrix(z4, z2, {0, 1, 0, 1}, q), qz2),
                 group_algebra(z4, q).counit()});
  out.push_back({"S3 onto Z2 (sign)",
                 surjection_coaction(qs3, group_hom_matrix(s3, z2, {0, 1, 0, 1, 1, 0}, q), qz2), qs3.counit()});
  {
    const HopfAlgebra qk4 = group_algebra(k4, q);
    out.push_back({"K4 onto Z2", surjection_coaction(qk4, group_hom_matrix(k4, z2, {0, 1, 0, 1}, q), qz2),
                   qk4.counit()});
  }
  {
    const HopfAlgebra sw = sweedler_h4(q);
    Matrix g(q, 4, 2);  // Q[Z2] -> Sweedler, g -> g
    g(0, 0) = q.one();
    g(1, 1) = q.one();
    out.push_back({"x^2 over Sweedler via g",
                   pushforward_coaction(grading_coaction(truncated_polynomial(q, 2), z2, {0, 1}), g, sw),
                   first_coordinate(q, 2)});
  }
  {
    const Coaction c = trivial_bundle_coaction(qz2);
    Vector eps = zero_vector(q, 4);
    eps[0] = eps[1] = q.one();  // y -> 0, g -> 1
    out.push_back({"k[y]/y^2 (x) Z2", c, eps});
  }
  {
    const HopfAlgebra t = taft(3, 7, 2);
    const Field f7 = t.field();
    out.push_back({"trivial poly2 over taft 3 7 2", trivial_coaction(truncated_polynomial(f7, 2), t),
                   first_coordinate(f7, 2)});
  }
  return out;
}

/// The inclusion-style checks every corpus coaction must pass before use.
inline bool all_pass(const ValidityReport& r) { return r.ok(); }

inline Subspace unit_span(const Algebra& a) { return Subspace::span(a.field(), a.dim(), {a.unit()}); }

inline Subspace tensor_subspace(const Subspace& u, const Subspace& v) {
  std::vector<Vector> vs;
  for (const auto& x : u.vectors())
    for (const auto& y : v.vectors()) vs.push_back(tensor(x, y));
  return Subspace::span(u.field(), u.ambient_dim() * v.ambient_dim(), vs);
}

}  // namespace testsupport
