#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "vero/charp.hpp"
#include "vero/error.hpp"
#include "vero/groebner.hpp"
#include "vero/invariants.hpp"
#include "vero/parser.hpp"
#include "vero/toric.hpp"

namespace vero {

using Json = nlohmann::ordered_json;

/// Largest number of source variables accepted by the end-to-end runs.
inline constexpr std::size_t kMaxSourceArity = 12;

struct Check {
  std::string name;
  bool verdict = false;
  Json details = Json::object();
};

/// The JSON envelope shared by every command.
struct Report {
  std::string kind;
  Json params = Json::object();
  Json result;  // omitted when null
  std::vector<Check> checks;
  std::vector<std::string> cited_facts;

  bool verdict() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict; });
  }

  Json to_json() const {
    Json j;
    j["kind"] = kind;
    j["params"] = params;
    if (!result.is_null()) j["result"] = result;
    j["checks"] = Json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"verdict", c.verdict}, {"details", c.details}});
    j["cited_facts"] = cited_facts;
    j["verdict"] = verdict();
    return j;
  }
};

/// ℚ followed by the given primes (validated, duplicates dropped, order kept).
inline std::vector<CoeffDomain> characteristics_for(const std::vector<std::uint64_t>& primes) {
  std::vector<CoeffDomain> out{CoeffDomain::rationals()};
  for (auto p : primes) {
    auto dom = CoeffDomain::prime_field(p);
    if (std::find(out.begin(), out.end(), dom) == out.end()) out.push_back(dom);
  }
  return out;
}

template <Field F>
std::vector<std::string> poly_strings(const std::vector<Polynomial<F>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline Json vector_json(const ExponentVector& v) { return Json(std::vector<Exponent>(v.begin(), v.end())); }

// ---------------------------------------------------------------------------
// Field-free summaries of the typed results.

struct CiSummary {
  std::string inverted;
  std::vector<std::string> candidates;
  std::vector<std::uint32_t> alpha_exponents;
  std::size_t height = 0;
  bool members_in_ideal = false;
  bool generates_after_saturation = false;
  bool count_matches_height = false;
  bool verified = false;
  std::vector<std::string> notes;
};

template <Field F>
CiSummary summarize(const CIReport<F>& r) {
  return {r.inverted_name,        poly_strings(r.candidates),   r.alpha_exponents,
          r.height.value_or(0),   r.members_in_ideal,           r.generates_after_saturation,
          r.count_matches_height, r.verified,                   r.notes};
}

inline Json to_json(const CiSummary& s) {
  Json j;
  j["inverted"] = s.inverted;
  j["candidate_count"] = s.candidates.size();
  j["candidates"] = s.candidates;
  j["alpha_exponents"] = s.alpha_exponents;
  j["height"] = s.height;
  j["members_in_ideal"] = s.members_in_ideal;
  j["generates_after_saturation"] = s.generates_after_saturation;
  j["count_matches_height"] = s.count_matches_height;
  j["notes"] = s.notes;
  return j;
}

struct RadicalCover {
  bool covered = false;
  std::vector<std::string> subset;
  /// Per ring variable: least e with v^e ∈ I + (subset), absent when v is not in the radical.
  std::vector<std::pair<std::string, std::optional<std::uint64_t>>> witnesses;
};

/// Whether every ring variable lies in √(I + (subset variables)).
template <Field F>
RadicalCover radical_cover_check(const Ideal<F>& ideal, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw InvalidArgument("radical cover needs a nonempty variable subset");
  const auto& ring = ideal.ring();
  for (auto v : subset)
    if (v >= ring->arity()) throw InvalidArgument("subset variable out of range");
  auto bigger = ideal_sum(ideal, variable_ideal(ring, subset));
  RadicalCover out;
  out.covered = true;
  for (auto v : subset) out.subset.push_back(ring->name(v));
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    auto r = radical_member(Polynomial<F>::variable(ring, v), bigger);
    out.witnesses.emplace_back(ring->name(v), r.exponent);
    if (!r.member) out.covered = false;
  }
  return out;
}

inline Json to_json(const RadicalCover& r) {
  Json w = Json::object();
  for (const auto& [name, e] : r.witnesses) w[name] = e ? Json(*e) : Json(nullptr);
  return {{"subset", r.subset}, {"covered", r.covered}, {"witness_exponents", w}};
}

struct FpuritySummary {
  std::uint32_t prime = 0;
  bool f_pure = false;
  std::string method;
  std::size_t colon_generator_count = 0;
  std::size_t certificate_terms = 0;
  /// Printed when short.
  std::optional<std::string> certificate;
};

inline constexpr std::size_t kPrintedCertificateTerms = 16;

template <Field F>
FpuritySummary summarize(const FpurityReport<F>& r) {
  FpuritySummary s{r.prime, r.f_pure, r.method, r.colon_generators.size(), 0, std::nullopt};
  if (r.certificate) {
    s.certificate_terms = r.certificate->size();
    if (s.certificate_terms <= kPrintedCertificateTerms) s.certificate = r.certificate->to_string();
  }
  return s;
}

inline Json to_json(const FpuritySummary& s) {
  Json j;
  j["prime"] = s.prime;
  j["f_pure"] = s.f_pure;
  j["method"] = s.method;
  j["colon_generator_count"] = s.colon_generator_count;
  j["certificate_terms"] = s.certificate_terms;
  j["certificate"] = s.certificate ? Json(*s.certificate) : Json(nullptr);
  return j;
}

inline Json to_json(const NonPurityWitness& w, std::uint64_t p) {
  ExponentVector scaled = w.difference;
  for (auto& e : scaled) e *= static_cast<Exponent>(p);
  return {{"numerator", vector_json(w.numerator)},
          {"generator", vector_json(w.generator)},
          {"difference", vector_json(w.difference)},
          {"difference_in_semigroup", false},
          {"scaled_difference", vector_json(scaled)},
          {"scaled_difference_in_semigroup", true}};
}

inline Json to_json(const GradedPiece& g) {
  return {{"index", g.index}, {"degree", g.degree}, {"dimension", g.dimension}};
}

// ---------------------------------------------------------------------------
// Monomial-map helpers.

/// Indices of targets that are pure powers x_j^e (at most one per letter, first wins).
inline std::vector<std::size_t> pure_power_indices(const MonomialMap& map) {
  std::vector<std::size_t> out;
  std::vector<bool> seen(map.target_arity, false);
  for (std::size_t i = 0; i < map.source_arity; ++i) {
    const auto& a = map.targets[i];
    std::size_t nz = 0, letter = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j]) ++nz, letter = j;
    if (nz == 1 && !seen[letter]) {
      seen[letter] = true;
      out.push_back(i);
    }
  }
  return out;
}

namespace detail {

// v ∈ Z-span of gens, by integer row echelon form.
inline bool in_integer_span(const std::vector<ExponentVector>& gens, const ExponentVector& target) {
  const std::size_t k = target.size();
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : gens) rows.emplace_back(g.begin(), g.end());
  std::vector<std::int64_t> v(target.begin(), target.end());
  std::size_t top = 0;
  for (std::size_t c = 0; c < k; ++c) {
    // Euclid on column c among rows[top..] until at most one is nonzero.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        auto q = rows[r][c] / rows[top][c];
        for (std::size_t j = c; j < k; ++j) rows[r][j] -= q * rows[top][j];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (top < rows.size() && rows[top][c] != 0) {
      if (v[c] % rows[top][c] != 0) return false;
      auto q = v[c] / rows[top][c];
      for (std::size_t j = c; j < k; ++j) v[j] -= q * rows[top][j];
      ++top;
    } else if (v[c] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// The Veronese degree n when the targets all have degree n, include every
/// pure power x_j^n and generate the lattice {v : n | Σv}. Then the semigroup
/// ring and the n-th Veronese ring of F[x] share a normalization.
inline std::optional<std::uint32_t> veronese_hull_degree(const MonomialMap& map) {
  const auto n = map.target_degree(0);
  for (std::size_t i = 0; i < map.source_arity; ++i)
    if (map.target_degree(i) != n) return std::nullopt;
  if (pure_power_indices(map).size() != map.target_arity) return std::nullopt;
  for (std::size_t j = 1; j < map.target_arity; ++j) {
    ExponentVector v(map.target_arity, 0);
    v[0] = static_cast<Exponent>(n - 1);
    v[j] = 1;
    if (!detail::in_integer_span(map.targets, v)) return std::nullopt;
  }
  return static_cast<std::uint32_t>(n);
}

/// veronese_lc_piece(k, n, i, 0) for 0 <= i <= k.
inline std::vector<GradedPiece> degree_zero_pieces(std::size_t k, std::uint32_t n) {
  std::vector<GradedPiece> out;
  for (std::size_t i = 0; i <= k; ++i)
    out.push_back(veronese_lc_piece(static_cast<std::int64_t>(k), n, static_cast<std::int64_t>(i), 0));
  return out;
}

inline void check_source_cap(const MonomialMap& map) {
  if (map.source_arity > kMaxSourceArity)
    throw ResourceCapError("monomial map has " + std::to_string(map.source_arity) + " source variables; the cap is " +
                           std::to_string(kMaxSourceArity));
}

// ---------------------------------------------------------------------------
// Cited facts. These are inputs taken from the literature, not computed.

inline constexpr const char* kCitedCharP =
    "characteristic p > 0: if R/I is Cohen-Macaulay then H^i_I(R) = 0 for i > height I (cited, not computed)";
inline constexpr const char* kCitedCharZero =
    "characteristic 0: the cohomological dimension of a Veronese presentation ideal equals its height (cited, not "
    "computed)";
inline constexpr const char* kCitedReduction =
    "over Z: p-torsion-freeness of H^{h+1}_I(R) follows from the localized complete intersections and the radical "
    "cover; surjectivity of p follows from characteristic-p vanishing (argument cited, inputs computed)";

// ---------------------------------------------------------------------------
// Cohomological-dimension certificate for a Veronese presentation.

struct CharacteristicRun {
  std::string characteristic;
  std::size_t toric_size = 0;  // minimal generators
  std::size_t height = 0;
  bool algorithms_agree = false;
  std::vector<CiSummary> ci;
  RadicalCover radical_cover;
  std::optional<FpuritySummary> fpurity;
};

struct CdCertificate {
  std::size_t k = 0, n = 0, d = 0;
  std::size_t h = 0;  // C(k+n-1, n) - k
  std::vector<std::string> characteristics;
  std::vector<CharacteristicRun> runs;
  std::vector<GradedPiece> lc_pieces;
  bool lc_degree_zero = false;
  bool heights_agree = false;
  bool verdict = false;
  std::vector<std::string> cited_facts;

  Report report() const {
    Report r;
    r.kind = "cd_certificate";
    r.params = {{"k", k}, {"n", n}, {"characteristics", characteristics}};
    r.result = {{"d", d}, {"height", h}, {"cohomological_dimension", verdict ? Json(h) : Json(nullptr)}};
    for (const auto& run : runs) {
      const auto tag = "[" + run.characteristic + "]";
      r.checks.push_back({"toric_algorithms_agree" + tag, run.algorithms_agree, {{"minimal_generators", run.toric_size}}});
      r.checks.push_back(
          {"height" + tag, run.height == h, {{"computed", run.height}, {"expected", h}}});
      for (const auto& ci : run.ci)
        r.checks.push_back({"complete_intersection_at_" + ci.inverted + tag, ci.verified && ci.candidates.size() == h,
                            to_json(ci)});
      r.checks.push_back({"radical_cover" + tag, run.radical_cover.covered, to_json(run.radical_cover)});
      if (run.fpurity) r.checks.push_back({"f_pure" + tag, run.fpurity->f_pure, to_json(*run.fpurity)});
    }
    Json heights = Json::object();
    for (const auto& run : runs) heights[run.characteristic] = run.height;
    r.checks.push_back({"heights_agree", heights_agree, {{"heights", heights}}});
    Json pieces = Json::array();
    for (const auto& g : lc_pieces) pieces.push_back(to_json(g));
    r.checks.push_back({"lc_degree_zero", lc_degree_zero, {{"pieces", pieces}}});
    r.cited_facts = cited_facts;
    return r;
  }
};

namespace detail {

template <Field F>
CharacteristicRun veronese_run(const MonomialMap& map, const F& field) {
  CharacteristicRun run;
  run.characteristic = field.domain().name();
  auto ring = source_ring(map, field);
  auto by_elim = toric_ideal_elimination(map, field);
  auto by_lattice = toric_ideal_lattice(map, field);
  run.algorithms_agree = ideal_equal(by_elim, by_lattice);
  auto minimal = minimalize_generators(by_elim, map_weights(map));
  run.toric_size = minimal.size();
  Ideal<F> ideal(ring, minimal);
  run.height = krull_dim(ideal).height;
  for (std::size_t letter = 0; letter < map.target_arity; ++letter) {
    auto seq = veronese_localization_sequence(map, letter, ring);
    run.ci.push_back(summarize(ci_check(ideal, std::move(seq), run.height)));
  }
  auto pure = pure_power_indices(map);
  run.radical_cover = radical_cover_check(ideal, pure);
  if constexpr (is_prime_field_v<F>) run.fpurity = summarize(fedder_fpure_toric(map, ideal, field.prime()));
  return run;
}

}  // namespace detail

/// Runs every checkable input of the vanishing theorem for the n-th Veronese
/// of F[x_1..x_k], over ℚ and each prime.
inline CdCertificate cd_certificate(std::size_t k, std::size_t n, const std::vector<std::uint64_t>& primes) {
  if (k < 1 || n < 1) throw InvalidArgument("cd_certificate needs k >= 1 and n >= 1");
  if (primes.empty()) throw InvalidArgument("cd_certificate needs at least one prime");
  const auto d = binomial(static_cast<std::int64_t>(k + n - 1), static_cast<std::int64_t>(n));
  if (d > kMaxSourceArity)
    throw ResourceCapError("Veronese (" + std::to_string(k) + "," + std::to_string(n) + ") has d = " +
                           std::to_string(d) + " source variables; the cap is " + std::to_string(kMaxSourceArity));
  auto map = veronese_map(k, static_cast<std::uint32_t>(n));
  CdCertificate cert;
  cert.k = k;
  cert.n = n;
  cert.d = map.source_arity;
  cert.h = cert.d - k;
  for (const auto& dom : characteristics_for(primes)) {
    cert.characteristics.push_back(dom.name());
    cert.runs.push_back(with_field(dom, [&](const auto& field) { return detail::veronese_run(map, field); }));
  }
  cert.heights_agree = std::all_of(cert.runs.begin(), cert.runs.end(),
                                   [&](const CharacteristicRun& r) { return r.height == cert.runs.front().height; });
  cert.lc_pieces = degree_zero_pieces(k, static_cast<std::uint32_t>(n));
  cert.lc_degree_zero =
      std::all_of(cert.lc_pieces.begin(), cert.lc_pieces.end(), [](const GradedPiece& g) { return g.dimension == 0; });
  cert.cited_facts = {kCitedCharP, kCitedCharZero, kCitedReduction};
  cert.verdict = cert.report().verdict();
  return cert;
}

// ---------------------------------------------------------------------------
// Presentation of a monomial algebra.

struct PresentationOptions {
  std::vector<std::uint64_t> primes{2, 3, 5};
  /// Radical-cover subset as t-variable names; empty = the pure-power variables.
  std::vector<std::string> subset;
  /// Localization candidates per inverted t-variable name; empty = derived at
  /// every pure-power variable.
  std::vector<std::pair<std::string, std::string>> candidates;
};

/// Exponent vectors of the quartic curve semigroup x^4, x^3y, xy^3, y^4.
inline std::vector<ExponentVector> quartic_curve_targets() { return {{4, 0}, {3, 1}, {1, 3}, {0, 4}}; }

inline constexpr const char* kQuarticCurveGenerators = "t1*t4 - t2*t3, t2*t4^2 - t3^3, t1*t3^2 - t2^2*t4, t1^2*t3 - t2^3";

namespace detail {

inline std::size_t variable_index(const std::string& name, std::size_t d) {
  if (name.size() >= 2 && name[0] == 't' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    auto i = std::stoul(name.substr(1));
    if (i >= 1 && i <= d) return i - 1;
  }
  throw InvalidArgument("unknown variable '" + name + "' (expected t1..t" + std::to_string(d) + ")");
}

template <Field F>
void presentation_run(const MonomialMap& map, const F& field, const PresentationOptions& opt, Report& rep,
                      Json& heights, Json& generators) {
  const auto tag = "[" + field.domain().name() + "]";
  auto ring = source_ring(map, field);
  auto by_elim = toric_ideal_elimination(map, field);
  auto by_lattice = toric_ideal_lattice(map, field);
  const bool agree = ideal_equal(by_elim, by_lattice);
  auto minimal = minimalize_generators(by_elim, map_weights(map));
  Ideal<F> ideal(ring, minimal);
  rep.checks.push_back({"toric_algorithms_agree" + tag, agree, {{"minimal_generators", minimal.size()}}});
  if (generators.is_null()) generators = poly_strings(minimal);
  const auto height = ideal.is_zero() ? 0 : krull_dim(ideal).height;
  heights[field.domain().name()] = height;

  // Localized complete intersections.
  std::vector<std::pair<std::size_t, std::optional<std::vector<Polynomial<F>>>>> jobs;
  if (opt.candidates.empty()) {
    for (auto v : pure_power_indices(map)) jobs.emplace_back(v, std::nullopt);
  } else {
    for (const auto& [name, text] : opt.candidates)
      jobs.emplace_back(variable_index(name, map.source_arity), make_polynomial_list<F>(text, ring));
  }
  for (auto& [v, given] : jobs) {
    const auto name = "complete_intersection_at_" + ring->name(v) + tag;
    if (given) {
      auto r = summarize(ci_check(ideal, *given, v, height));
      rep.checks.push_back({name, r.verified, to_json(r)});
      continue;
    }
    auto derived = derive_localization_candidates(map, v, ring);
    if (!derived) {
      rep.checks.push_back({name, false, {{"inverted", ring->name(v)}, {"notes", {"no localization basis found"}}}});
      continue;
    }
    auto r = summarize(ci_check(ideal, std::move(*derived), height));
    rep.checks.push_back({name, r.verified, to_json(r)});
  }

  std::vector<std::size_t> subset;
  for (const auto& s : opt.subset) subset.push_back(variable_index(s, map.source_arity));
  if (subset.empty()) subset = pure_power_indices(map);
  if (!subset.empty()) {
    auto rc = radical_cover_check(ideal, subset);
    rep.checks.push_back({"radical_cover" + tag, rc.covered, to_json(rc)});
  }

  if constexpr (is_prime_field_v<F>) {
    const auto p = field.prime();
    auto fp = summarize(fedder_fpure_toric(map, ideal, p));
    Json details = to_json(fp);
    // A non-F-pure answer is corroborated by a semigroup witness.
    bool consistent = fp.f_pure;
    if (!fp.f_pure) {
      auto w = find_non_purity_witness(AffineSemigroup(map.targets), p);
      details["non_purity_witness"] = w ? to_json(*w, p) : Json(nullptr);
      consistent = w.has_value();
    }
    rep.checks.push_back({"f_purity_decided" + tag, consistent, details});
  }
}

}  // namespace detail

/// Toric ideal, heights, localized complete intersections, radical cover and
/// F-purity for the algebra generated by x^{a_i}.
inline Report present_monomial_algebra(const std::vector<ExponentVector>& targets, const PresentationOptions& opt) {
  auto map = monomial_algebra_map(targets);
  check_source_cap(map);
  Report rep;
  rep.kind = "presentation";
  Json tj = Json::array();
  for (const auto& t : targets) tj.push_back(vector_json(t));
  rep.params["targets"] = tj;
  rep.params["primes"] = opt.primes;
  rep.params["subset"] = opt.subset;
  Json cj = Json::object();
  for (const auto& [name, text] : opt.candidates) cj[name] = text;
  rep.params["candidates"] = cj;

  Json heights = Json::object(), generators;
  for (const auto& dom : characteristics_for(opt.primes))
    with_field(dom, [&](const auto& field) { detail::presentation_run(map, field, opt, rep, heights, generators); });

  std::size_t first = heights.begin().value().get<std::size_t>();
  bool constant = std::all_of(heights.begin(), heights.end(), [&](const Json& h) { return h.get<std::size_t>() == first; });
  rep.checks.push_back({"heights_agree", constant, {{"heights", heights}}});
  if (auto n = veronese_hull_degree(map)) {
    auto pieces = degree_zero_pieces(map.target_arity, *n);
    Json pj = Json::array();
    for (const auto& g : pieces) pj.push_back(to_json(g));
    bool zero = std::all_of(pieces.begin(), pieces.end(), [](const GradedPiece& g) { return g.dimension == 0; });
    rep.checks.push_back({"lc_degree_zero", zero, {{"normalization", "veronese(" + std::to_string(map.target_arity) +
                                                                        "," + std::to_string(*n) + ")"},
                                                   {"pieces", pj}}});
  }
  rep.result = {{"d", map.source_arity},
                {"k", map.target_arity},
                {"veronese", map.veronese_degree ? Json(*map.veronese_degree) : Json(nullptr)},
                {"height", first},
                {"minimal_generators", generators}};

  if (targets == quartic_curve_targets()) {
    rep.cited_facts = {
        "characteristic p > 0: the arithmetic rank of I is 2, so its cohomological dimension is 2 (cited, not computed)",
        "characteristic 0: the cohomological dimension of I is 2 (cited, not computed)",
        "with the computed localizations and radical cover, the cohomological dimension of I over Z is 2"};
  } else if (map.veronese_degree) {
    rep.cited_facts = {kCitedCharP, kCitedCharZero, kCitedReduction};
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Height across characteristics.

struct VeroneseFixture {
  std::size_t k = 0, n = 0;
};
struct SymmetricMinorsFixture {
  std::size_t size = 0;
};
struct DeterminantalFixture {};  // 2x2 minors of a generic 2x3 matrix over u..z
struct QuarticCurveFixture {};
struct IdealFixture {
  std::vector<std::string> ring;
  std::string ideal;
};
using CharFixture = std::variant<VeroneseFixture, SymmetricMinorsFixture, DeterminantalFixture, QuarticCurveFixture,
                                 IdealFixture>;

inline constexpr const char* kDeterminantalRing = "u,v,w,x,y,z";
inline constexpr const char* kDeterminantalIdeal = "v*z - w*y, w*x - u*z, u*y - v*x";

inline std::string describe(const CharFixture& f) {
  struct {
    std::string operator()(const VeroneseFixture& v) const {
      return "veronese(" + std::to_string(v.k) + "," + std::to_string(v.n) + ")";
    }
    std::string operator()(const SymmetricMinorsFixture& s) const {
      return "symmetric_minors(" + std::to_string(s.size) + ")";
    }
    std::string operator()(const DeterminantalFixture&) const { return "generic_2x3_minors"; }
    std::string operator()(const QuarticCurveFixture&) const { return "quartic_curve"; }
    std::string operator()(const IdealFixture& i) const { return "ideal(" + i.ideal + ")"; }
  } v;
  return std::visit(v, f);
}

template <Field F>
Ideal<F> build_fixture(const CharFixture& fixture, const F& field) {
  struct {
    const F& field;
    Ideal<F> operator()(const VeroneseFixture& v) const {
      if (v.k < 1 || v.n < 1) throw InvalidArgument("Veronese fixture needs k, n >= 1");
      auto map = veronese_map(v.k, static_cast<std::uint32_t>(v.n));
      check_source_cap(map);
      return toric_ideal_elimination(map, field);
    }
    Ideal<F> operator()(const SymmetricMinorsFixture& s) const {
      if (s.size < 1) throw InvalidArgument("symmetric fixture needs size >= 1");
      if (s.size * (s.size + 1) / 2 > kMaxSourceArity) throw ResourceCapError("symmetric fixture too large");
      return symmetric_minor_ideal(s.size, field);
    }
    Ideal<F> operator()(const DeterminantalFixture&) const {
      auto ring = make_ring(field, split_names(kDeterminantalRing));
      return Ideal<F>(ring, make_polynomial_list<F>(kDeterminantalIdeal, ring));
    }
    Ideal<F> operator()(const QuarticCurveFixture&) const {
      auto map = monomial_algebra_map(quartic_curve_targets());
      auto ring = source_ring(map, field);
      return Ideal<F>(ring, make_polynomial_list<F>(kQuarticCurveGenerators, ring));
    }
    Ideal<F> operator()(const IdealFixture& i) const {
      auto ring = make_ring(field, i.ring);
      return Ideal<F>(ring, make_polynomial_list<F>(i.ideal, ring));
    }
  } v{field};
  return std::visit(v, fixture);
}

struct CharCompareReport {
  std::string description;
  std::vector<std::pair<std::string, std::size_t>> heights;
  bool constant = false;
  std::vector<std::string> cited_facts;

  Report report() const {
    Report r;
    r.kind = "char_compare";
    std::vector<std::string> chars;
    Json hj = Json::object();
    for (const auto& [c, h] : heights) {
      chars.push_back(c);
      hj[c] = h;
    }
    r.params = {{"fixture", description}, {"characteristics", chars}};
    r.result = {{"heights", hj}, {"constant", constant}};
    r.checks.push_back({"height_constant", constant, {{"heights", hj}}});
    r.cited_facts = cited_facts;
    return r;
  }
};

inline CharCompareReport char_compare(const CharFixture& fixture, const std::vector<std::uint64_t>& primes) {
  CharCompareReport out;
  out.description = describe(fixture);
  for (const auto& dom : characteristics_for(primes)) {
    auto h = with_field(dom, [&](const auto& field) {
      auto ideal = build_fixture(fixture, field);
      return ideal.is_zero() ? std::size_t{0} : krull_dim(ideal).height;
    });
    out.heights.emplace_back(dom.name(), h);
  }
  out.constant = std::all_of(out.heights.begin(), out.heights.end(),
                             [&](const auto& e) { return e.second == out.heights.front().second; });
  if (std::holds_alternative<DeterminantalFixture>(fixture)) {
    out.cited_facts = {"characteristic 0: the cohomological dimension is 3 (cited, not computed)",
                       "characteristic p > 0: the cohomological dimension is 2, as R/I is Cohen-Macaulay (cited)"};
  } else if (auto s = std::get_if<SymmetricMinorsFixture>(&fixture); s && s->size >= 2) {
    const auto m = s->size;
    out.cited_facts = {"arithmetic rank: " + std::to_string(m * (m - 1) / 2) + " in characteristic 2, " +
                       std::to_string(m * (m + 1) / 2 - 2) + " otherwise (cited, not computed)"};
  }
  return out;
}

}  // namespace vero
