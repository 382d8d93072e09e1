#include "hopfkit/document.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "hopfkit/catalog.hpp"
#include "hopfkit/error.hpp"
#include "json_io.hpp"

namespace hopfkit {

using io::json;

std::string object_type(const Object& o) {
  static const char* names[] = {"algebra", "hopf", "coaction", "bundle", "subspace", "morphism", "bundle-morphism",
                                "equivalence"};
  return names[o.index()];
}

const Object& Document::get(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) throw ParseError("unresolved reference \"" + name + "\"");
  return it->second;
}

void Document::add(const std::string& name, Object o) {
  if (objects_.count(name)) throw ParseError("duplicate object \"" + name + "\"");
  objects_.emplace(name, std::move(o));
}

namespace {

template <class T>
const T& typed(const Document& d, const std::string& name, const char* what) {
  const Object& o = d.get(name);
  if (auto p = std::get_if<T>(&o)) return *p;
  throw ParseError("object \"" + name + "\" is a " + object_type(o) + ", expected " + what);
}

}  // namespace

std::pair<Algebra, std::optional<Vector>> Document::algebra_of(const std::string& name) const {
  const Object& o = get(name);
  if (auto a = std::get_if<AlgebraObject>(&o)) return {a->algebra, a->augmentation};
  if (auto h = std::get_if<HopfObject>(&o)) return {h->hopf.algebra(), h->hopf.counit()};
  throw ParseError("object \"" + name + "\" is a " + object_type(o) + ", expected algebra or hopf");
}

const HopfAlgebra& Document::hopf_of(const std::string& name) const { return typed<HopfObject>(*this, name, "hopf").hopf; }
const CoactionObject& Document::coaction_of(const std::string& name) const {
  return typed<CoactionObject>(*this, name, "coaction");
}
const BundleObject& Document::bundle_of(const std::string& name) const { return typed<BundleObject>(*this, name, "bundle"); }
const Subspace& Document::subspace_of(const std::string& name) const {
  return typed<SubspaceObject>(*this, name, "subspace").subspace;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const json& member(const json& o, const char* key, const std::string& path) {
  if (!o.is_object()) fail(path, "expected an object");
  auto it = o.find(key);
  if (it == o.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const json* optional_member(const json& o, const char* key) {
  auto it = o.find(key);
  return it == o.end() ? nullptr : &*it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::size_t as_index(const json& j, const std::string& path, std::size_t bound) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  const auto v = j.get<unsigned long long>();
  if (v >= bound) fail(path, "index " + std::to_string(v) + " out of range (bound " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

std::size_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar as_scalar(const Field& f, const json& j, const std::string& path) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (!j.is_string()) fail(path, "expected a scalar string or integer");
  try {
    return f.parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Vector as_vector(const Field& f, const json& j, std::size_t n, const std::string& path) {
  as_array(j, path);
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(as_scalar(f, j[i], path + "/" + std::to_string(i)));
  return v;
}

std::vector<Vector> as_vectors(const Field& f, const json& j, std::size_t n, const std::string& path) {
  as_array(j, path);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_vector(f, j[i], n, path + "/" + std::to_string(i)));
  return out;
}

/// Dense rows; the shape is taken from the data unless given.
Matrix as_dense(const Field& f, const json& j, const std::string& path, std::optional<std::size_t> rows = {},
                std::optional<std::size_t> cols = {}) {
  as_array(j, path);
  if (rows && j.size() != *rows) fail(path, "expected " + std::to_string(*rows) + " rows, found " + std::to_string(j.size()));
  std::size_t c = cols ? *cols : (j.empty() ? 0 : as_array(j[0], path + "/0").size());
  Matrix m(f, j.size(), c);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Vector row = as_vector(f, j[r], c, path + "/" + std::to_string(r));
    for (std::size_t k = 0; k < c; ++k) m(r, k) = row[k];
  }
  return m;
}

std::vector<Entry3> as_entries3(const Field& f, const json& j, const std::string& path, std::size_t bi, std::size_t bj,
                                std::size_t bk) {
  as_array(j, path);
  std::vector<Entry3> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const std::string p = path + "/" + std::to_string(n);
    if (!j[n].is_array() || j[n].size() != 4) fail(p, "expected [i, j, k, \"c\"]");
    out.push_back({as_index(j[n][0], p + "/0", bi), as_index(j[n][1], p + "/1", bj), as_index(j[n][2], p + "/2", bk),
                   as_scalar(f, j[n][3], p + "/3")});
  }
  return out;
}

std::vector<std::string> as_names(const json& j, const std::string& path) {
  as_array(j, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], path + "/" + std::to_string(i)));
  return out;
}

Algebra parse_algebra_body(const Field& f, const json& o, const std::string& path) {
  std::vector<std::string> names = as_names(member(o, "basis", path), path + "/basis");
  const std::size_t d = names.size();
  if (auto dim = optional_member(o, "dim"); dim && as_count(*dim, path + "/dim") != d) {
    fail(path + "/dim", "does not match the number of basis names");
  }
  Vector unit = as_vector(f, member(o, "unit", path), d, path + "/unit");
  auto mult = as_entries3(f, member(o, "mult", path), path + "/mult", d, d, d);
  return Algebra(f, std::move(names), mult, std::move(unit));
}

HopfAlgebra parse_hopf_body(const Field& f, const json& o, const std::string& path) {
  Algebra a = parse_algebra_body(f, o, path);
  const std::size_t d = a.dim();
  auto comult = as_entries3(f, member(o, "comult", path), path + "/comult", d, d, d);
  Vector counit = as_vector(f, member(o, "counit", path), d, path + "/counit");
  const json& s = as_array(member(o, "antipode", path), path + "/antipode");
  Matrix antipode(f, d, d);
  for (std::size_t n = 0; n < s.size(); ++n) {
    const std::string p = path + "/antipode/" + std::to_string(n);
    if (!s[n].is_array() || s[n].size() != 3) fail(p, "expected [i, j, \"c\"]");
    const std::size_t i = as_index(s[n][0], p + "/0", d), j = as_index(s[n][1], p + "/1", d);
    antipode(j, i) += as_scalar(f, s[n][2], p + "/2");
  }
  try {
    return HopfAlgebra(std::move(a), comult, std::move(counit), std::move(antipode));
  } catch (const PreconditionError& e) {
    fail(path, e.what());
  }
}

HopfAlgebra catalog_hopf_checked(const Field& f, const std::string& name, const std::string& path) {
  HopfAlgebra h = catalog_hopf(name, f);
  if (h.field() != f) fail(path, "catalog entry \"" + name + "\" lives over " + h.field().name() + ", document field is " + f.name());
  return h;
}

class Parser {
 public:
  Parser(const json& objects, Document& doc) : objects_(objects), doc_(doc) {}

  void ensure(const std::string& name, const std::string& from) {
    if (doc_.contains(name)) return;
    if (!objects_.contains(name)) fail(from, "unresolved reference \"" + name + "\"");
    if (!visiting_.insert(name).second) fail(from, "reference cycle through \"" + name + "\"");
    doc_.add(name, parse_object(objects_.at(name), "/objects/" + name));
    visiting_.erase(name);
  }

 private:
  std::string ref(const json& o, const char* key, const std::string& path) {
    const std::string p = path + "/" + key;
    std::string name = as_string(member(o, key, path), p);
    ensure(name, p);
    return name;
  }

  Object parse_object(const json& o, const std::string& path) {
    const Field& f = doc_.field();
    const std::string type = as_string(member(o, "type", path), path + "/type");
    if (type == "algebra") {
      if (auto cat = optional_member(o, "catalog")) {
        const std::string name = as_string(*cat, path + "/catalog");
        if (name.rfind("poly ", 0) == 0) {
          std::size_t n = 0;
          try {
            n = std::stoul(name.substr(5));
          } catch (const std::exception&) {
            fail(path + "/catalog", "expected \"poly <n>\"");
          }
          Algebra a = truncated_polynomial(f, n);
          return AlgebraObject{a, unit_vector(f, n, 0)};
        }
        HopfAlgebra h = catalog_hopf_checked(f, name, path + "/catalog");
        return AlgebraObject{h.algebra(), h.counit()};
      }
      Algebra a = parse_algebra_body(f, o, path);
      std::optional<Vector> aug;
      if (auto au = optional_member(o, "augmentation")) aug = as_vector(f, *au, a.dim(), path + "/augmentation");
      return AlgebraObject{std::move(a), std::move(aug)};
    }
    if (type == "hopf") {
      if (auto cat = optional_member(o, "catalog")) return HopfObject{catalog_hopf_checked(f, as_string(*cat, path + "/catalog"), path + "/catalog")};
      return HopfObject{parse_hopf_body(f, o, path)};
    }
    if (type == "coaction") {
      if (auto reg = optional_member(o, "regular")) {
        const std::string h = as_string(*reg, path + "/regular");
        ensure(h, path + "/regular");
        return CoactionObject{h, h, regular_coaction(doc_.hopf_of(h))};
      }
      const std::string a = ref(o, "algebra", path), h = ref(o, "hopf", path);
      Algebra alg = doc_.algebra_of(a).first;
      const HopfAlgebra& hopf = doc_.hopf_of(h);
      auto entries = as_entries3(f, member(o, "map", path), path + "/map", alg.dim(), alg.dim(), hopf.dim());
      return CoactionObject{a, h, Coaction::from_entries(std::move(alg), hopf, entries)};
    }
    if (type == "bundle") {
      const std::string c = ref(o, "coaction", path);
      const Coaction& co = doc_.coaction_of(c).coaction;
      const std::size_t d = co.comodule().dim();
      std::vector<Vector> gens;
      if (auto calc = optional_member(o, "calculus")) gens = as_vectors(f, *calc, d * d, path + "/calculus");
      std::optional<std::string> seed;
      if (optional_member(o, "seed")) {
        seed = ref(o, "seed", path);
        const Subspace& s = doc_.subspace_of(*seed);
        if (s.ambient_dim() != d) fail(path + "/seed", "seed does not live in the comodule algebra");
      }
      return BundleObject{c, seed, make_bundle(co, Subspace::span(f, d * d, gens))};
    }
    if (type == "subspace") {
      const std::size_t n = as_count(member(o, "ambient", path), path + "/ambient");
      return SubspaceObject{Subspace::span(f, n, as_vectors(f, member(o, "vectors", path), n, path + "/vectors"))};
    }
    if (type == "morphism") {
      const std::string s = ref(o, "source", path), t = ref(o, "target", path);
      const std::size_t ds = doc_.algebra_of(s).first.dim(), dt = doc_.algebra_of(t).first.dim();
      return MorphismObject{s, t, as_dense(f, member(o, "matrix", path), path + "/matrix", dt, ds)};
    }
    if (type == "bundle-morphism") {
      const std::string s = ref(o, "source", path), t = ref(o, "target", path);
      const Coaction& cs = doc_.bundle_of(s).bundle.coaction;
      const Coaction& ct = doc_.bundle_of(t).bundle.coaction;
      return BundleMorphismObject{
          s, t, as_dense(f, member(o, "phi", path), path + "/phi", ct.comodule().dim(), cs.comodule().dim()),
          as_dense(f, member(o, "psi", path), path + "/psi", ct.hopf().dim(), cs.hopf().dim())};
    }
    if (type == "equivalence") {
      const std::string a = ref(o, "first", path), b = ref(o, "second", path);
      doc_.bundle_of(a);
      doc_.bundle_of(b);
      const json& fw = member(o, "forward", path);
      const json& bw = member(o, "backward", path);
      return EquivalenceObject{a,
                               b,
                               as_dense(f, member(fw, "phi", path + "/forward"), path + "/forward/phi"),
                               as_dense(f, member(fw, "psi", path + "/forward"), path + "/forward/psi"),
                               as_dense(f, member(bw, "phi", path + "/backward"), path + "/backward/phi"),
                               as_dense(f, member(bw, "psi", path + "/backward"), path + "/backward/psi")};
    }
    fail(path + "/type", "unknown object type \"" + type + "\"");
  }

  const json& objects_;
  Document& doc_;
  std::set<std::string> visiting_;
};

Field parse_field(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
    const json& p = j.at("Fp");
    if (!p.is_number_integer() || p.get<long long>() < 2) fail("/field/Fp", "expected a prime");
    const auto v = p.get<unsigned long long>();
    if (!is_prime(v)) fail("/field/Fp", std::to_string(v) + " is not prime");
    return Field::prime(v);
  }
  fail("/field", "expected \"Q\" or {\"Fp\": <prime>}");
}

}  // namespace

Document parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  if (!root.is_object()) fail("", "document must be a JSON object");
  for (const auto& [key, _] : root.items()) {
    if (key != "field" && key != "objects" && key != "report") fail("/" + key, "unknown top-level key");
  }
  Document doc(parse_field(member(root, "field", "")));
  const json& objects = member(root, "objects", "");
  if (!objects.is_object()) fail("/objects", "expected an object");
  Parser parser(objects, doc);
  for (const auto& [name, _] : objects.items()) parser.ensure(name, "/objects");
  return doc;
}

namespace io {

json scalar_json(const Scalar& s) { return s.to_string(); }

json vector_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

json subspace_json(const Subspace& s) { return matrix_json(s.basis()); }

json algebra_body(const Algebra& a) {
  json mult = json::array();
  for (const auto& e : a.entries()) mult.push_back({e.i, e.j, e.k, scalar_json(e.c)});
  return {{"dim", a.dim()}, {"basis", a.basis_names()}, {"unit", vector_json(a.unit())}, {"mult", mult}};
}

json hopf_body(const HopfAlgebra& h) {
  json out = algebra_body(h.algebra());
  json comult = json::array();
  for (const auto& e : h.comult_entries()) comult.push_back({e.i, e.j, e.k, scalar_json(e.c)});
  json antipode = json::array();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      if (!h.antipode()(j, i).is_zero()) antipode.push_back({i, j, scalar_json(h.antipode()(j, i))});
    }
  }
  out["comult"] = comult;
  out["counit"] = vector_json(h.counit());
  out["antipode"] = antipode;
  return out;
}

json coaction_map_json(const Coaction& c) {
  json out = json::array();
  for (const auto& e : c.entries()) out.push_back({e.i, e.j, e.k, scalar_json(e.c)});
  return out;
}

json field_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return {{"Fp", f.characteristic()}};
}

json element_list(const std::vector<std::string>& names, const Subspace& s) {
  json out = json::array();
  for (const auto& v : s.vectors()) out.push_back(format_element(names, v));
  return out;
}

json document_json(const Document& doc) {
  json objects = json::object();
  for (const auto& [name, obj] : doc.objects()) {
    json o = std::visit(
        [](const auto& x) -> json {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, AlgebraObject>) {
            json b = algebra_body(x.algebra);
            if (x.augmentation) b["augmentation"] = vector_json(*x.augmentation);
            return b;
          } else if constexpr (std::is_same_v<T, HopfObject>) {
            return hopf_body(x.hopf);
          } else if constexpr (std::is_same_v<T, CoactionObject>) {
            return {{"algebra", x.algebra}, {"hopf", x.hopf}, {"map", coaction_map_json(x.coaction)}};
          } else if constexpr (std::is_same_v<T, BundleObject>) {
            json b = {{"coaction", x.coaction}, {"calculus", subspace_json(x.bundle.calculus)}};
            if (x.seed) b["seed"] = *x.seed;
            return b;
          } else if constexpr (std::is_same_v<T, SubspaceObject>) {
            return {{"ambient", x.subspace.ambient_dim()}, {"vectors", subspace_json(x.subspace)}};
          } else if constexpr (std::is_same_v<T, MorphismObject>) {
            return {{"source", x.source}, {"target", x.target}, {"matrix", matrix_json(x.matrix)}};
          } else if constexpr (std::is_same_v<T, BundleMorphismObject>) {
            return {{"source", x.source}, {"target", x.target}, {"phi", matrix_json(x.phi)}, {"psi", matrix_json(x.psi)}};
          } else {
            return {{"first", x.first},
                    {"second", x.second},
                    {"forward", {{"phi", matrix_json(x.forward_phi)}, {"psi", matrix_json(x.forward_psi)}}},
                    {"backward", {{"phi", matrix_json(x.backward_phi)}, {"psi", matrix_json(x.backward_psi)}}}};
          }
        },
        obj);
    o["type"] = object_type(obj);
    objects[name] = std::move(o);
  }
  return {{"field", field_json(doc.field())}, {"objects", objects}};
}

}  // namespace io

std::string serialize_document(const Document& doc) { return io::document_json(doc).dump(2) + "\n"; }

}  // namespace hopfkit
