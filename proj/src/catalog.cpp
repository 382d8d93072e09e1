#include "hopfkit/catalog.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

#include "hopfkit/error.hpp"

namespace hopfkit {

FiniteGroupTable make_group(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw PreconditionError("group: empty table");
  if (names.size() != n) throw PreconditionError("group: need one name per element");
  for (const auto& row : table) {
    if (row.size() != n) throw PreconditionError("group: table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw PreconditionError("group: table entry out of range");
    }
  }
  FiniteGroupTable g{n, std::move(table), std::vector<std::size_t>(n), n, std::move(names)};
  for (std::size_t e = 0; e < n && g.identity == n; ++e) {
    bool unit = true;
    for (std::size_t a = 0; a < n && unit; ++a) unit = g.table[e][a] == a && g.table[a][e] == a;
    if (unit) g.identity = e;
  }
  if (g.identity == n) throw PreconditionError("group: no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    auto it = std::find(g.table[a].begin(), g.table[a].end(), g.identity);
    const std::size_t b = static_cast<std::size_t>(it - g.table[a].begin());
    if (it == g.table[a].end() || g.table[b][a] != g.identity) {
      throw PreconditionError("group: " + g.names[a] + " has no two-sided inverse");
    }
    g.inverse[a] = b;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) {
          throw PreconditionError("group: associativity fails on (" + g.names[a] + ", " + g.names[b] + ", " + g.names[c] + ")");
        }
      }
    }
  }
  return g;
}

FiniteGroupTable trivial_group() { return make_group({{0}}, {"1"}); }

FiniteGroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic_group: order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    names[a] = a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a);
  }
  return make_group(std::move(t), std::move(names));
}

FiniteGroupTable direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h) {
  const std::size_t n = g.order * h.order;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = "(" + g.names[a / h.order] + "," + h.names[a % h.order] + ")";
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = g.table[a / h.order][b / h.order] * h.order + h.table[a % h.order][b % h.order];
    }
  }
  return make_group(std::move(t), std::move(names));
}

namespace {

std::string cycle_name(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += "(";
    for (std::size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      if (x != s) out += " ";
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroupTable permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators) {
  using Perm = std::vector<std::size_t>;
  for (const auto& p : generators) {
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted.size() != degree || sorted[i] != i) throw PreconditionError("permutation_group: generator is not a permutation");
    }
  }
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  // (p * q)(x) = p(q(x))
  auto mul = [&](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      Perm next = mul(elems[i], s);
      if (!index.count(next)) {
        index.emplace(next, elems.size());
        elems.push_back(std::move(next));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = cycle_name(elems[a]);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(mul(elems[a], elems[b]));
  }
  return make_group(std::move(t), std::move(names));
}

FiniteGroupTable symmetric_group(std::size_t n) {
  if (n < 2) return trivial_group();
  std::vector<std::size_t> swap(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(swap[0], swap[1]);
  return permutation_group(n, {swap, cycle});
}

FiniteGroupTable dihedral_group(std::size_t n) {
  if (n < 3) throw PreconditionError("dihedral_group: need n >= 3");
  std::vector<std::size_t> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return permutation_group(n, {rot, refl});
}

FiniteGroupTable alternating_group4() { return permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

std::vector<std::size_t> generated_subgroup(const FiniteGroupTable& g, const std::vector<std::size_t>& generators) {
  std::vector<bool> in(g.order, false);
  std::vector<std::size_t> elems{g.identity};
  in[g.identity] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s : generators) {
      const std::size_t next = g.table[elems[i]][s];
      if (!in[next]) {
        in[next] = true;
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

HopfAlgebra group_algebra(const FiniteGroupTable& g, const Field& f) {
  const std::size_t n = g.order;
  std::vector<Entry3> mult, comult;
  Matrix s(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult.push_back({a, b, g.table[a][b], f.one()});
    comult.push_back({a, a, a, f.one()});
    s(g.inverse[a], a) = f.one();
  }
  Algebra alg(f, g.names, mult, unit_vector(f, n, g.identity));
  return HopfAlgebra(std::move(alg), comult, Vector(n, f.one()), std::move(s));
}

HopfAlgebra function_algebra(const FiniteGroupTable& g, const Field& f) { return dual_hopf(group_algebra(g, f), "p_", ""); }

Matrix group_hom_matrix(const FiniteGroupTable& g, const FiniteGroupTable& h, const std::vector<std::size_t>& images,
                        const Field& f) {
  if (images.size() != g.order) throw PreconditionError("group_hom_matrix: need one image per element");
  for (std::size_t v : images) {
    if (v >= h.order) throw PreconditionError("group_hom_matrix: image out of range");
  }
  for (std::size_t a = 0; a < g.order; ++a) {
    for (std::size_t b = 0; b < g.order; ++b) {
      if (images[g.table[a][b]] != h.table[images[a]][images[b]]) {
        throw PreconditionError("group_hom_matrix: not a homomorphism on (" + g.names[a] + ", " + g.names[b] + ")");
      }
    }
  }
  Matrix m(f, h.order, g.order);
  for (std::size_t a = 0; a < g.order; ++a) m(images[a], a) = f.one();
  return m;
}

namespace {

/// Taft-type algebra on g^i x^j (index i + n j) with xg = q gx, g^n = 1, x^n = 0.
HopfAlgebra taft_structure(const Field& f, std::size_t n, const Scalar& q, std::vector<std::string> names) {
  const std::size_t d = n * n;
  std::vector<Scalar> qpow{f.one()};
  for (std::size_t k = 1; k < n; ++k) qpow.push_back(qpow.back() * q);
  std::vector<Entry3> mult;
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      const std::size_t a = u % n, b = u / n, c = v % n, e = v / n;
      if (b + e >= n) continue;
      mult.push_back({u, v, (a + c) % n + n * (b + e), qpow[(b * c) % n]});
    }
  }
  Algebra alg(f, std::move(names), mult, unit_vector(f, d, 0));
  const Vector one = unit_vector(f, d, 0), g = unit_vector(f, d, 1), x = unit_vector(f, d, n);
  const Vector dg = tensor(g, g);
  const Vector dx = tensor(x, one) + tensor(g, x);
  const Vector g_inv = unit_vector(f, d, n - 1);
  const Vector sx = scaled(-f.one(), alg.multiply(g_inv, x));

  std::vector<Entry3> comult;
  Matrix antipode(f, d, d);
  Vector counit(d, f.zero());
  for (std::size_t u = 0; u < d; ++u) {
    const std::size_t i = u % n, j = u / n;
    Vector delta = tensor(one, one);
    Vector s = one;
    for (std::size_t k = 0; k < i; ++k) {
      delta = tensor_multiply(alg, alg, delta, dg);
      s = alg.multiply(g_inv, s);
    }
    for (std::size_t k = 0; k < j; ++k) {
      delta = tensor_multiply(alg, alg, delta, dx);
      s = alg.multiply(sx, s);
    }
    for (std::size_t p = 0; p < d * d; ++p) {
      if (!delta[p].is_zero()) comult.push_back({u, p / d, p % d, delta[p]});
    }
    antipode.set_column(u, s);
    if (j == 0) counit[u] = f.one();
  }
  return HopfAlgebra(std::move(alg), comult, std::move(counit), std::move(antipode));
}

}  // namespace

HopfAlgebra sweedler_h4(const Field& f) {
  if (f.characteristic() == 2) throw PreconditionError("sweedler_h4: characteristic 2 is not allowed");
  return taft_structure(f, 2, -f.one(), {"1", "g", "x", "gx"});
}

HopfAlgebra taft(std::size_t n, std::uint64_t p, long long root) {
  if (n < 2) throw PreconditionError("taft: need n >= 2");
  const Field f = Field::prime(p);
  if ((p - 1) % n != 0) throw PreconditionError("taft: n does not divide p - 1");
  const Scalar q = f.from_int(root);
  Scalar pw = f.one();
  for (std::size_t k = 1; k <= n; ++k) {
    pw *= q;
    if (k < n && pw.is_one()) throw PreconditionError("taft: root is not primitive");
  }
  if (!pw.is_one()) throw PreconditionError("taft: root is not an n-th root of unity");
  std::vector<std::string> names;
  for (std::size_t u = 0; u < n * n; ++u) {
    const std::size_t i = u % n, j = u / n;
    std::string s = i == 0 ? "" : i == 1 ? "g" : "g^" + std::to_string(i);
    s += j == 0 ? "" : j == 1 ? "x" : "x^" + std::to_string(j);
    names.push_back(s.empty() ? "1" : s);
  }
  HopfAlgebra h = taft_structure(f, n, q, std::move(names));
  if (!(power(h.antipode(), static_cast<unsigned>(2 * n)) == Matrix::identity(f, n * n))) {
    throw InvariantViolation("taft: S^(2n) != id");
  }
  return h;
}

Algebra truncated_polynomial(const Field& f, std::size_t n) {
  if (n == 0) throw PreconditionError("truncated_polynomial: need n >= 1");
  std::vector<Entry3> mult;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    for (std::size_t j = 0; i + j < n; ++j) mult.push_back({i, j, i + j, f.one()});
  }
  return Algebra(f, std::move(names), mult, unit_vector(f, n, 0));
}

Coaction grading_coaction(const Algebra& a, const FiniteGroupTable& g, const std::vector<std::size_t>& degrees) {
  if (degrees.size() != a.dim()) throw PreconditionError("grading_coaction: need one degree per basis element");
  for (std::size_t d : degrees) {
    if (d >= g.order) throw PreconditionError("grading_coaction: degree out of range");
  }
  for (const auto& e : a.entries()) {
    if (degrees[e.k] != g.table[degrees[e.i]][degrees[e.j]]) {
      throw PreconditionError("grading_coaction: not multiplicative on (" + a.basis_names()[e.i] + ", " +
                              a.basis_names()[e.j] + ", " + a.basis_names()[e.k] + ")");
    }
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!a.unit()[i].is_zero() && degrees[i] != g.identity) throw PreconditionError("grading_coaction: unit is not of identity degree");
  }
  std::vector<Entry3> entries;
  for (std::size_t i = 0; i < a.dim(); ++i) entries.push_back({i, i, degrees[i], a.field().one()});
  return Coaction::from_entries(a, group_algebra(g, a.field()), entries);
}

Coaction surjection_coaction(const HopfAlgebra& a, const Matrix& psi, const HopfAlgebra& h) {
  if (psi.rows() != h.dim() || psi.cols() != a.dim()) throw DimensionMismatch("surjection_coaction: psi shape mismatch");
  const ValidityReport r = check_hopf_morphism(psi, a, h);
  if (!r.ok()) throw PreconditionError("surjection_coaction: psi is not a Hopf algebra morphism");
  if (rank(psi) != h.dim()) throw PreconditionError("surjection_coaction: psi is not surjective");
  return pushforward_coaction(regular_coaction(a), psi, h);
}

FiniteGroupTable catalog_group(const std::string& name) {
  std::smatch m;
  static const std::regex cyclic(R"(Z(\d+))"), product(R"(Z(\d+)xZ(\d+))"), dihedral(R"(D(\d+))");
  if (name == "trivial") return trivial_group();
  if (name == "K4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "S3") return symmetric_group(3);
  if (name == "A4") return alternating_group4();
  auto num = [](const std::string& s) {
    const unsigned long v = std::stoul(s);
    if (v == 0 || v > 64) throw ParseError("catalog: group order out of range");
    return static_cast<std::size_t>(v);
  };
  if (std::regex_match(name, m, product)) return direct_product(cyclic_group(num(m[1])), cyclic_group(num(m[2])));
  if (std::regex_match(name, m, cyclic)) return cyclic_group(num(m[1]));
  if (std::regex_match(name, m, dihedral)) return dihedral_group(num(m[1]));
  throw ParseError("catalog: unknown group \"" + name + "\"");
}

HopfAlgebra catalog_hopf(const std::string& name, const Field& f) {
  if (name == "sweedler") return sweedler_h4(f);
  if (name.rfind("taft", 0) == 0) {
    std::istringstream in(name.substr(4));
    std::size_t n = 0;
    std::uint64_t p = 0;
    long long root = 0;
    if (!(in >> n >> p >> root)) throw ParseError("catalog: expected \"taft <n> <p> <root>\"");
    return taft(n, p, root);
  }
  if (name.rfind("fun(", 0) == 0 && name.back() == ')') return function_algebra(catalog_group(name.substr(4, name.size() - 5)), f);
  return group_algebra(catalog_group(name), f);
}

}  // namespace hopfkit
