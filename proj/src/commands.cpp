#include "hopfkit/commands.hpp"

#include <functional>
#include <map>
#include <set>

#include "hopfkit/catalog.hpp"
#include "hopfkit/error.hpp"
#include "json_io.hpp"

namespace hopfkit {

using io::json;

namespace {

/// Thrown to report a verb outcome that is neither true nor false.
struct Unsupported {
  std::string message;
};

std::string first_failure(const ValidityReport& r) {
  for (const auto& item : r.items()) {
    if (!item.passed()) return item.name + (item.violations.empty() ? "" : ": " + item.violations.front().detail);
  }
  return "";
}

json items_json(const ValidityReport& r) {
  json out = json::array();
  for (const auto& item : r.items()) {
    json violations = json::array();
    for (const auto& v : item.violations) violations.push_back({{"indices", v.indices}, {"detail", v.detail}});
    out.push_back({{"name", item.name}, {"passed", item.passed()}, {"count", item.count}, {"violations", violations}});
  }
  return out;
}

json subspace_summary(const std::vector<std::string>& names, const Subspace& s) {
  return {{"dim", s.dim()}, {"basis", io::element_list(names, s)}, {"vectors", io::subspace_json(s)}};
}

class Session {
 public:
  Session(const Document& doc, const CommandOptions& opt) : doc_(doc), opt_(opt) {}

  const Document& doc() const { return doc_; }

  std::string pick(std::initializer_list<const char*> types) const {
    auto matches = [&](const Object& o) {
      for (const char* t : types) {
        if (object_type(o) == t) return true;
      }
      return false;
    };
    std::string wanted;
    for (const char* t : types) wanted += (wanted.empty() ? "" : " or ") + std::string(t);
    if (opt_.object) {
      if (!matches(doc_.get(*opt_.object))) {
        throw PreconditionError("object \"" + *opt_.object + "\" is a " + object_type(doc_.get(*opt_.object)) +
                                ", expected " + wanted);
      }
      return *opt_.object;
    }
    std::vector<std::string> found;
    for (const auto& [name, o] : doc_.objects()) {
      if (matches(o)) found.push_back(name);
    }
    if (found.size() != 1) {
      throw PreconditionError(found.empty() ? "no " + wanted + " object in the document"
                                            : "several " + wanted + " objects; choose one with --object");
    }
    return found.front();
  }

  /// Strict mode: the named object and everything it references pass their checkers.
  void require_valid(const std::string& name) {
    if (opt_.unchecked || validated_.count(name)) return;
    validated_.insert(name);
    const Object& o = doc_.get(name);
    auto reject = [&](const std::string& why) {
      throw PreconditionError("object \"" + name + "\" fails its axiom check (" + why + "); rerun with --unchecked to skip");
    };
    if (auto a = std::get_if<AlgebraObject>(&o)) {
      const ValidityReport r = check_algebra(a->algebra);
      if (!r.ok()) reject(first_failure(r));
      if (a->augmentation) {
        try {
          augmentation_ideal(a->algebra, *a->augmentation);
        } catch (const PreconditionError& e) {
          reject(e.what());
        }
      }
    } else if (auto h = std::get_if<HopfObject>(&o)) {
      const ValidityReport r = check_hopf(h->hopf);
      if (!r.ok()) reject(first_failure(r));
    } else if (auto c = std::get_if<CoactionObject>(&o)) {
      require_valid(c->algebra);
      require_valid(c->hopf);
      const ValidityReport r = check_coaction(c->coaction);
      if (!r.ok()) reject(first_failure(r));
    } else if (auto b = std::get_if<BundleObject>(&o)) {
      require_valid(b->coaction);
      const ValidityReport r = check_covariant_calculus(b->bundle);
      if (!r.ok()) reject(first_failure(r));
    } else if (auto m = std::get_if<MorphismObject>(&o)) {
      require_valid(m->source);
      require_valid(m->target);
    } else if (auto bm = std::get_if<BundleMorphismObject>(&o)) {
      require_valid(bm->source);
      require_valid(bm->target);
    } else if (auto e = std::get_if<EquivalenceObject>(&o)) {
      require_valid(e->first);
      require_valid(e->second);
    }
  }

  /// Seed precedence: --seed, then the bundle's "seed", then the augmentation
  /// ideal of the comodule algebra.
  std::pair<Subspace, std::string> seed_for(const std::string& bundle, bool allow_option) const {
    const BundleObject& b = doc_.bundle_of(bundle);
    const std::size_t d = b.bundle.coaction.comodule().dim();
    auto checked = [&](const Subspace& s, const std::string& src) {
      if (s.ambient_dim() != d) throw DimensionMismatch("seed \"" + src + "\" does not live in the comodule algebra");
      return std::pair<Subspace, std::string>{s, src};
    };
    if (allow_option && opt_.seed) return checked(doc_.subspace_of(*opt_.seed), "option:" + *opt_.seed);
    if (b.seed) return checked(doc_.subspace_of(*b.seed), "bundle:" + *b.seed);
    const CoactionObject& c = doc_.coaction_of(b.coaction);
    auto [alg, aug] = doc_.algebra_of(c.algebra);
    if (aug) return {augmentation_ideal(alg, *aug), "augmentation:" + c.algebra};
    throw PreconditionError(
        "no seed for the stable ideal of bundle \"" + bundle +
        "\": without a properness restriction the largest stable ideal is the whole algebra; pass --seed <subspace>, "
        "give the bundle a \"seed\", or declare an \"augmentation\" on the algebra");
  }

 private:
  const Document& doc_;
  const CommandOptions& opt_;
  std::set<std::string> validated_;
};

struct Outcome {
  int exit_code;
  json report;
};

Outcome verb_check_hopf(Session& s) {
  const std::string name = s.pick({"hopf"});
  const ValidityReport r = check_hopf(s.doc().hopf_of(name));
  return {r.ok() ? 0 : 1, {{"object", name}, {"valid", r.ok()}, {"violations", r.violation_count()}, {"items", items_json(r)}}};
}

Outcome verb_check_coaction(Session& s) {
  const std::string name = s.pick({"coaction"});
  const CoactionObject& c = s.doc().coaction_of(name);
  s.require_valid(c.algebra);
  s.require_valid(c.hopf);
  const ValidityReport r = check_coaction(c.coaction);
  return {r.ok() ? 0 : 1, {{"object", name}, {"valid", r.ok()}, {"violations", r.violation_count()}, {"items", items_json(r)}}};
}

Outcome verb_hopf_image(Session& s) {
  const std::string name = s.pick({"coaction"});
  s.require_valid(name);
  const Coaction& c = s.doc().coaction_of(name).coaction;
  const auto& names = c.hopf().basis_names();
  const HopfImage hi = hopf_image(c);
  return {0,
          {{"object", name},
           {"hopf_dim", c.hopf().dim()},
           {"coefficient_space", subspace_summary(names, coefficient_space(c))},
           {"hopf_image", subspace_summary(names, hi.sub.carrier)},
           {"inner_faithful", hi.sub.carrier.dim() == c.hopf().dim()}}};
}

Outcome verb_inner_faithful(Session& s) {
  const std::string name = s.pick({"coaction"});
  s.require_valid(name);
  const Coaction& c = s.doc().coaction_of(name).coaction;
  const std::size_t dim = hopf_image(c).sub.carrier.dim();
  const bool yes = dim == c.hopf().dim();
  return {yes ? 0 : 1, {{"object", name}, {"inner_faithful", yes}, {"hopf_image_dim", dim}, {"hopf_dim", c.hopf().dim()}}};
}

Outcome verb_coinvariants(Session& s) {
  const std::string name = s.pick({"coaction"});
  s.require_valid(name);
  const Coaction& c = s.doc().coaction_of(name).coaction;
  return {0, {{"object", name}, {"coinvariants", subspace_summary(c.comodule().basis_names(), coinvariants(c))}}};
}

json canonical_json(const CanonicalMap& can, std::size_t target) {
  return {{"domain_dim", can.domain.quotient.quo_dim}, {"target_dim", target}, {"rank", can.rank},
          {"injective", can.injective}, {"surjective", can.surjective}, {"bijective", can.bijective}};
}

Outcome verb_galois(Session& s) {
  const std::string name = s.pick({"coaction"});
  s.require_valid(name);
  const Coaction& c = s.doc().coaction_of(name).coaction;
  const Subspace b = coinvariants(c);
  const CanonicalMap can = canonical_map(c, b);
  json rep = canonical_json(can, c.comodule().dim() * c.hopf().dim());
  rep["object"] = name;
  rep["coinvariants"] = subspace_summary(c.comodule().basis_names(), b);
  return {can.bijective ? 0 : 1, rep};
}

Outcome verb_qpb(Session& s) {
  const std::string name = s.pick({"bundle"});
  s.require_valid(s.doc().bundle_of(name).coaction);
  const Bundle& b = s.doc().bundle_of(name).bundle;
  const QpbCheck q = check_qpb(b);
  const Coaction& c = b.coaction;
  return {q.ok() ? 0 : 1,
          {{"object", name},
           {"principal", q.ok()},
           {"items", items_json(q.report)},
           {"coinvariants", subspace_summary(c.comodule().basis_names(), q.coinvariants)},
           {"canonical_map", canonical_json(q.can, c.comodule().dim() * c.hopf().dim())},
           {"ver_image_dim", q.ver_image.dim()},
           {"right_ideal", subspace_summary(c.hopf().basis_names(), q.right_ideal)}}};
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json("unsupported"); }

json reduction_json(const ReductionResult& r, const std::string& seed_source) {
  const ReducedBundle& rb = r.reduced;
  const auto& a_names = rb.original.coaction.comodule().basis_names();
  const HopfAlgebra& hd = rb.hopf_inclusion.induced;
  json claims = json::array();
  for (const auto& c : r.claims) claims.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
  json a0 = io::algebra_body(rb.quotient.algebra);
  json hdj = io::hopf_body(hd);
  return {{"seed", {{"source", seed_source}, {"dim", rb.seed.dim()}, {"basis", io::element_list(a_names, rb.seed)}}},
          {"seed_note", "the stable ideal is the greatest one inside the seed; the whole algebra is always stable"},
          {"hopf_image", subspace_summary(rb.original.coaction.hopf().basis_names(), rb.hopf_inclusion.carrier)},
          {"ideal", subspace_summary(a_names, rb.ideal)},
          {"reduced",
           {{"algebra", a0},
            {"hopf", hdj},
            {"map", io::coaction_map_json(rb.bundle.coaction)},
            {"calculus", io::subspace_json(rb.bundle.calculus)},
            {"projection", io::matrix_json(rb.quotient.projection.matrix())},
            {"inclusion", io::matrix_json(rb.hopf_inclusion.inclusion.matrix())}}},
          {"coinvariants", subspace_summary(rb.quotient.algebra.basis_names(), r.base)},
          {"cosemisimple", optional_bool(r.cosemisimple)},
          {"principal", r.qpb.ok()},
          {"qpb_items", items_json(r.qpb.report)},
          {"claims", claims}};
}

int claims_exit(const ReductionResult& r) {
  for (const auto& c : r.claims) {
    if (c.status == ClaimStatus::Refuted) return 1;
  }
  return 0;
}

ReductionResult reduce_named(Session& s, const std::string& bundle, bool allow_option, std::string* seed_source = nullptr) {
  s.require_valid(bundle);
  auto [seed, source] = s.seed_for(bundle, allow_option);
  if (seed_source) *seed_source = source;
  return hopf_image_reduction(s.doc().bundle_of(bundle).bundle, seed);
}

Outcome verb_reduce(Session& s) {
  const std::string name = s.pick({"bundle"});
  std::string source;
  const ReductionResult r = reduce_named(s, name, true, &source);
  json rep = reduction_json(r, source);
  rep["object"] = name;
  return {claims_exit(r), rep};
}

Outcome verb_cosemisimple(Session& s) {
  const std::string name = s.pick({"hopf"});
  s.require_valid(name);
  const std::optional<bool> r = is_cosemisimple(s.doc().hopf_of(name));
  if (!r) throw Unsupported{"cosemisimplicity is only decided over Q; this document is over " + s.doc().field().name()};
  return {*r ? 0 : 1, {{"object", name}, {"cosemisimple", *r}}};
}

Outcome verb_reduce_morphism(Session& s) {
  const std::string name = s.pick({"bundle-morphism"});
  s.require_valid(name);
  const auto& m = std::get<BundleMorphismObject>(s.doc().get(name));
  const Bundle& src = s.doc().bundle_of(m.source).bundle;
  const Bundle& dst = s.doc().bundle_of(m.target).bundle;
  const ReductionResult rs = reduce_named(s, m.source, false);
  const ReductionResult rt = reduce_named(s, m.target, false);
  const BundleMorphism bm{AlgebraMorphism(src.coaction.comodule(), dst.coaction.comodule(), m.phi), m.psi};
  const ValidityReport before = check_bundle_morphism(bm, src, dst);
  if (!before.ok()) throw PreconditionError("\"" + name + "\" is not a bundle morphism: " + first_failure(before));
  const BundleMorphism red = reduce_morphism(bm, rs.reduced, rt.reduced);
  const ValidityReport after = check_bundle_morphism(red, rs.reduced.bundle, rt.reduced.bundle);
  return {after.ok() ? 0 : 1,
          {{"object", name},
           {"phi", io::matrix_json(red.phi.matrix())},
           {"psi", io::matrix_json(red.psi)},
           {"valid", after.ok()},
           {"items", items_json(after)}}};
}

Outcome verb_equivalent(Session& s) {
  const std::string name = s.pick({"equivalence"});
  s.require_valid(name);
  const auto& e = std::get<EquivalenceObject>(s.doc().get(name));
  const ReductionResult r1 = reduce_named(s, e.first, false);
  const ReductionResult r2 = reduce_named(s, e.second, false);
  const Algebra& a1 = r1.reduced.quotient.algebra;
  const Algebra& a2 = r2.reduced.quotient.algebra;
  Equivalence eq;
  const bool shapes = e.forward_phi.rows() == a2.dim() && e.forward_phi.cols() == a1.dim() &&
                      e.backward_phi.rows() == a1.dim() && e.backward_phi.cols() == a2.dim();
  if (a1.dim() != a2.dim() || r1.reduced.hopf_inclusion.carrier.dim() != r2.reduced.hopf_inclusion.carrier.dim()) {
    const BundleMorphism dummy{identity_morphism(a1), Matrix::identity(a1.field(), 1)};
    eq = bundles_equivalent(r1.reduced, r2.reduced, dummy, dummy);
  } else if (!shapes) {
    eq = {false, "witness matrices do not match the reduced algebras"};
  } else {
    eq = bundles_equivalent(r1.reduced, r2.reduced, BundleMorphism{AlgebraMorphism(a1, a2, e.forward_phi), e.forward_psi},
                            BundleMorphism{AlgebraMorphism(a2, a1, e.backward_phi), e.backward_psi});
  }
  return {eq.equivalent ? 0 : 1,
          {{"object", name},
           {"equivalent", eq.equivalent},
           {"reason", eq.reason},
           {"first_reduced_dims", {a1.dim(), r1.reduced.hopf_inclusion.carrier.dim()}},
           {"second_reduced_dims", {a2.dim(), r2.reduced.hopf_inclusion.carrier.dim()}}}};
}

const std::map<std::string, std::function<Outcome(Session&)>>& verb_table() {
  static const std::map<std::string, std::function<Outcome(Session&)>> table{
      {"check-hopf", verb_check_hopf},     {"check-coaction", verb_check_coaction},
      {"hopf-image", verb_hopf_image},     {"inner-faithful", verb_inner_faithful},
      {"coinvariants", verb_coinvariants}, {"galois", verb_galois},
      {"qpb-check", verb_qpb},             {"reduce", verb_reduce},
      {"cosemisimple", verb_cosemisimple}, {"reduce-morphism", verb_reduce_morphism},
      {"equivalent", verb_equivalent}};
  return table;
}

std::string render(const Document& doc, json report) {
  json out = io::document_json(doc);
  out["report"] = std::move(report);
  return out.dump(2) + "\n";
}

}  // namespace

const std::vector<std::string>& command_verbs() {
  static const std::vector<std::string> verbs = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : verb_table()) v.push_back(k);
    return v;
  }();
  return verbs;
}

CommandResult run_command(const std::string& verb, const std::string& document_text, const CommandOptions& options) {
  CommandResult result;
  auto it = verb_table().find(verb);
  if (it == verb_table().end()) {
    result.error = "unknown verb \"" + verb + "\"";
    return result;
  }
  std::optional<Document> doc;
  try {
    doc = parse_document(document_text);
  } catch (const std::exception& e) {
    result.error = e.what();
    return result;
  }
  json base = {{"verb", verb}, {"mode", options.unchecked ? "unchecked" : "strict"}};
  try {
    Session session(*doc, options);
    Outcome o = it->second(session);
    base.update(o.report);
    base["status"] = o.exit_code == 0 ? "verified" : "refuted";
    result.exit_code = o.exit_code;
  } catch (const Unsupported& u) {
    base["status"] = "unsupported";
    base["cosemisimple"] = "unsupported";
    base["detail"] = u.message;
    result.error = u.message;
    result.exit_code = 2;
  } catch (const std::exception& e) {
    base["status"] = "error";
    base["error"] = e.what();
    result.error = e.what();
    result.exit_code = 2;
  }
  result.output = render(*doc, base);
  return result;
}

CommandResult catalog_command(const std::string& entry, const std::string& field_spec, const std::string& name) {
  CommandResult result;
  try {
    Field f = Field::rationals();
    if (field_spec != "Q") {
      std::size_t pos = 0;
      const unsigned long long p = std::stoull(field_spec, &pos);
      if (pos != field_spec.size()) throw ParseError("field must be Q or a prime");
      f = Field::prime(p);
    }
    if (entry.rfind("taft", 0) == 0) f = catalog_hopf(entry, f).field();
    Document doc(f);
    if (entry.rfind("poly ", 0) == 0) {
      const std::size_t n = std::stoul(entry.substr(5));
      doc.add(name, AlgebraObject{truncated_polynomial(f, n), unit_vector(f, n, 0)});
    } else {
      doc.add(name, HopfObject{catalog_hopf(entry, f)});
    }
    result.output = serialize_document(doc);
    result.exit_code = 0;
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

}  // namespace hopfkit
