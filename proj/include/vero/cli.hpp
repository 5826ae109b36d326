#pragma once

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vero/pipeline.hpp"

namespace vero {

namespace cli_detail {

inline std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& s : split_names(text)) {
    if (s.empty() || s.size() > 10 || !std::all_of(s.begin(), s.end(), ::isdigit))
      throw InvalidArgument("bad prime '" + s + "'");
    out.push_back(std::stoull(s));
  }
  return out;
}

inline CoeffDomain parse_char(std::uint64_t c) {
  return c == 0 ? CoeffDomain::rationals() : CoeffDomain::prime_field(c);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<ExponentVector> parse_targets(const std::string& text) {
  auto rows = parse_vector_list(text);
  return {rows.begin(), rows.end()};
}

inline ExponentVector parse_vector(const std::string& text) {
  auto rows = parse_vector_list(text);
  if (rows.size() != 1) throw InvalidArgument("expected a single vector, got '" + text + "'");
  return rows.front();
}

// Inputs shared by the ideal-based commands.
struct IdealInput {
  std::string ring;
  std::string ideal;
  std::string ideal_file;
  std::uint64_t characteristic = 0;

  std::string text() const {
    if (!ideal.empty() && !ideal_file.empty()) throw InvalidArgument("give --ideal or --ideal-file, not both");
    if (!ideal_file.empty()) return read_file(ideal_file);
    if (ideal.empty()) throw InvalidArgument("an ideal is required (--ideal or --ideal-file)");
    return ideal;
  }

  template <Field F>
  Ideal<F> build(const F& field) const {
    if (ring.empty()) throw InvalidArgument("--ring is required");
    auto r = make_ring(field, split_names(ring));
    return Ideal<F>(r, make_polynomial_list<F>(text(), r));
  }

  Json params() const {
    return {{"ring", split_names(ring)}, {"ideal", text()}, {"char", parse_char(characteristic).name()}};
  }
};

inline void add_ideal_options(CLI::App* sub, IdealInput& in) {
  sub->add_option("--ring", in.ring, "comma-separated variable names")->required();
  sub->add_option("--ideal", in.ideal, "comma-separated generators");
  sub->add_option("--ideal-file", in.ideal_file, "file holding the generators");
  sub->add_option("--char", in.characteristic, "0 for QQ or a prime")->default_val(0);
}

inline std::size_t variable_named(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InvalidArgument("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

inline CharFixture parse_fixture(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::vector<std::uint64_t> args;
  if (colon != std::string::npos) args = parse_primes(text.substr(colon + 1));  // plain integer list
  if (kind == "veronese" && args.size() == 2) return VeroneseFixture{args[0], args[1]};
  if (kind == "symmetric" && args.size() == 1) return SymmetricMinorsFixture{args[0]};
  if (kind == "determinantal" && args.empty()) return DeterminantalFixture{};
  if (kind == "quartic" && args.empty()) return QuarticCurveFixture{};
  throw InvalidArgument("unknown fixture '" + text + "' (veronese:K,N | symmetric:N | determinantal | quartic)");
}

}  // namespace cli_detail

/// Runs the command line; returns the process exit code.
/// 0: every verdict true, 1: some verdict false, 2: input error, 3: resource cap.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Presentation ideals of monomial algebras and their local cohomology certificates", "vero"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  bool timing = false;
  app.add_option("--out", out_path, "write the JSON report to this file");
  app.add_flag("--timing", timing, "add wall-clock seconds as a top-level field");

  std::function<Report()> action;

  // veronese-ideal
  std::size_t vk = 0, vn = 0;
  std::uint64_t vchar = 0;
  std::string valgo = "both";
  auto* ver = app.add_subcommand("veronese-ideal", "presentation ideal of the n-th Veronese of F[x_1..x_k]");
  ver->add_option("-k", vk, "number of x variables")->required();
  ver->add_option("-n", vn, "Veronese degree")->required();
  ver->add_option("--char", vchar, "0 for QQ or a prime")->default_val(0);
  ver->add_option("--algorithm", valgo, "elimination, lattice or both")
      ->check(CLI::IsMember({"elimination", "lattice", "both"}))
      ->default_val("both");
  ver->callback([&] {
    action = [&] {
      if (vk < 1 || vn < 1) throw InvalidArgument("-k and -n must be positive");
      auto map = veronese_map(vk, static_cast<std::uint32_t>(vn));
      check_source_cap(map);
      Report rep;
      rep.kind = "veronese_ideal";
      rep.params = {{"k", vk}, {"n", vn}, {"char", parse_char(vchar).name()}, {"algorithm", valgo}};
      with_field(parse_char(vchar), [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        std::optional<Ideal<F>> by_elim, by_lattice;
        if (valgo != "lattice") by_elim = toric_ideal_elimination(map, field);
        if (valgo != "elimination") by_lattice = toric_ideal_lattice(map, field);
        const auto& ideal = by_elim ? *by_elim : *by_lattice;
        if (by_elim && by_lattice) rep.checks.push_back({"toric_algorithms_agree", ideal_equal(*by_elim, *by_lattice)});
        auto minimal = minimalize_generators(ideal);
        const auto d = map.source_arity;
        // Quadrics in the kernel: dim of degree 2 in F[t] minus degree 2n in F[x].
        const auto expected = binomial(static_cast<std::int64_t>(d + 1), 2) -
                              binomial(static_cast<std::int64_t>(2 * vn + vk - 1), static_cast<std::int64_t>(vk - 1));
        bool quadrics = std::all_of(minimal.begin(), minimal.end(),
                                    [](const Polynomial<F>& g) { return g.total_degree() == 2; });
        rep.checks.push_back({"generated_by_quadrics",
                              quadrics && minimal.size() == expected,
                              {{"minimal_generators", minimal.size()}, {"expected_quadrics", expected}}});
        if (vn == 2) {
          bool eq = ideal_equal(ideal, symmetric_minor_ideal(vk, field));
          rep.checks.push_back({"equals_symmetric_minors", eq, {{"size", vk}}});
        }
        const auto h = ideal.is_zero() ? std::size_t{0} : krull_dim(ideal).height;
        rep.checks.push_back({"height", h == d - vk, {{"computed", h}, {"expected", d - vk}}});
        rep.result = {{"d", d}, {"height", h}, {"generator_count", minimal.size()}, {"generators", poly_strings(minimal)}};
      });
      return rep;
    };
  });

  // present
  std::string ptargets, pprimes = "2,3,5", psubset;
  std::vector<std::string> pcands;
  auto* pre = app.add_subcommand("present", "presentation, heights, localizations, radical cover and F-purity");
  pre->add_option("--targets", ptargets, "exponent vectors, e.g. \"4,0;3,1;1,3;0,4\"")->required();
  pre->add_option("--primes", pprimes, "comma-separated primes")->default_val("2,3,5");
  pre->add_option("--subset", psubset, "radical-cover variables, e.g. t1,t4");
  pre->add_option("--candidates", pcands, "localization candidates as VAR=f,g (repeatable)");
  pre->callback([&] {
    action = [&] {
      PresentationOptions opt;
      opt.primes = parse_primes(pprimes);
      if (!psubset.empty()) opt.subset = split_names(psubset);
      for (const auto& c : pcands) {
        auto eq = c.find('=');
        if (eq == std::string::npos) throw InvalidArgument("candidates must look like VAR=f,g: '" + c + "'");
        auto name = split_names(c.substr(0, eq));
        if (name.size() != 1) throw InvalidArgument("candidates must name one variable: '" + c + "'");
        opt.candidates.emplace_back(name.front(), c.substr(eq + 1));
      }
      return present_monomial_algebra(parse_targets(ptargets), opt);
    };
  });

  // height
  IdealInput hin;
  auto* hei = app.add_subcommand("height", "height of an ideal and Krull dimension of the quotient");
  add_ideal_options(hei, hin);
  hei->callback([&] {
    action = [&] {
      Report rep;
      rep.kind = "height";
      rep.params = hin.params();
      with_field(parse_char(hin.characteristic), [&](const auto& field) {
        auto ideal = hin.build(field);
        auto r = krull_dim(ideal);
        rep.result = {{"height", r.height}, {"dim", r.dim}, {"order", r.order}};
      });
      return rep;
    };
  });

  // ci-check
  IdealInput cin;
  std::string cinvert, ccands;
  auto* cic = app.add_subcommand("ci-check", "do candidates generate the ideal after inverting a variable");
  add_ideal_options(cic, cin);
  cic->add_option("--invert", cinvert, "variable to invert")->required();
  cic->add_option("--candidates", ccands, "comma-separated candidates")->required();
  cic->callback([&] {
    action = [&] {
      Report rep;
      rep.kind = "ci_check";
      rep.params = cin.params();
      rep.params["invert"] = cinvert;
      rep.params["candidates"] = ccands;
      with_field(parse_char(cin.characteristic), [&](const auto& field) {
        auto ideal = cin.build(field);
        auto v = variable_named(ideal.ring()->names(), cinvert);
        auto r = summarize(ci_check(ideal, make_polynomial_list(ccands, ideal.ring()), v));
        rep.checks.push_back({"complete_intersection_at_" + cinvert, r.verified, to_json(r)});
      });
      return rep;
    };
  });

  // radical-cover
  IdealInput rin;
  std::string rsubset;
  auto* rad = app.add_subcommand("radical-cover", "is every variable in the radical of I + (subset)");
  add_ideal_options(rad, rin);
  rad->add_option("--subset", rsubset, "comma-separated variables")->required();
  rad->callback([&] {
    action = [&] {
      Report rep;
      rep.kind = "radical_cover";
      rep.params = rin.params();
      rep.params["subset"] = split_names(rsubset);
      with_field(parse_char(rin.characteristic), [&](const auto& field) {
        auto ideal = rin.build(field);
        std::vector<std::size_t> subset;
        for (const auto& s : split_names(rsubset)) subset.push_back(variable_named(ideal.ring()->names(), s));
        auto r = radical_cover_check(ideal, subset);
        rep.checks.push_back({"radical_cover", r.covered, to_json(r)});
      });
      return rep;
    };
  });

  // fedder
  std::string fring, fideal, ffile, ftargets;
  std::uint64_t fchar = 0;
  auto* fed = app.add_subcommand("fedder", "Fedder's F-purity criterion in characteristic p");
  fed->add_option("--ring", fring, "comma-separated variable names");
  fed->add_option("--ideal", fideal, "comma-separated generators");
  fed->add_option("--ideal-file", ffile, "file holding the generators");
  fed->add_option("--targets", ftargets, "toric ideal of these exponent vectors instead of --ideal");
  fed->add_option("--char", fchar, "the prime p")->required();
  fed->callback([&] {
    action = [&] {
      if (fchar == 0) throw DomainError("Fedder's criterion needs a prime characteristic");
      PrimeField field(fchar);
      Report rep;
      rep.kind = "fedder";
      FpuritySummary s;
      if (!ftargets.empty()) {
        if (!fideal.empty() || !ffile.empty()) throw InvalidArgument("give --targets or an ideal, not both");
        auto map = monomial_algebra_map(parse_targets(ftargets));
        check_source_cap(map);
        auto minimal = minimalize_generators(toric_ideal_elimination(map, field), map_weights(map));
        rep.params = {{"targets", ftargets}, {"char", field.domain().name()}};
        s = summarize(fedder_fpure_toric(map, Ideal<PrimeField>(source_ring(map, field), minimal), fchar));
      } else {
        IdealInput in{fring, fideal, ffile, fchar};
        rep.params = in.params();
        s = summarize(fedder_fpure(in.build(field), fchar));
      }
      rep.checks.push_back({"f_pure", s.f_pure, to_json(s)});
      return rep;
    };
  });

  // semigroup
  std::string sgens, starget, sdivisor;
  auto* sem = app.add_subcommand("semigroup", "membership in an affine semigroup");
  sem->add_option("--targets", sgens, "semigroup generators, e.g. \"4,0;3,1;1,3;0,4\"")->required();
  sem->add_option("--member", starget, "vector to test")->required();
  sem->add_option("--divisor", sdivisor, "test x^member ∈ (x^divisor) instead");
  sem->callback([&] {
    action = [&] {
      AffineSemigroup s(parse_targets(sgens));
      auto target = parse_vector(starget);
      Report rep;
      rep.kind = "semigroup";
      rep.params = {{"generators", sgens}, {"member", starget}};
      if (!sdivisor.empty()) {
        rep.params["divisor"] = sdivisor;
        bool in = monomial_ideal_member_semigroup(s, target, parse_vector(sdivisor));
        rep.checks.push_back({"ideal_member", in});
        return rep;
      }
      auto m = semigroup_member(s, target);
      Json w = Json::array();
      for (const auto& g : m.witness) w.push_back(vector_json(g));
      rep.checks.push_back({"member", m.member, {{"witness", w}}});
      return rep;
    };
  });

  // cd-certificate
  std::size_t ck = 0, cn = 0;
  std::string cprimes = "2,3,5";
  auto* cdc = app.add_subcommand("cd-certificate", "certificate that cd(I) = height I for a Veronese presentation");
  cdc->add_option("-k", ck, "number of x variables")->required();
  cdc->add_option("-n", cn, "Veronese degree")->required();
  cdc->add_option("--primes", cprimes, "comma-separated primes")->default_val("2,3,5");
  cdc->callback([&] { action = [&] { return cd_certificate(ck, cn, parse_primes(cprimes)).report(); }; });

  // char-compare
  std::string xfix, xprimes = "2,3,5";
  IdealInput xin;
  auto* chc = app.add_subcommand("char-compare", "height over QQ and several prime fields");
  chc->add_option("--fixture", xfix, "veronese:K,N | symmetric:N | determinantal | quartic");
  chc->add_option("--ring", xin.ring, "comma-separated variable names");
  chc->add_option("--ideal", xin.ideal, "comma-separated generators");
  chc->add_option("--ideal-file", xin.ideal_file, "file holding the generators");
  chc->add_option("--primes", xprimes, "comma-separated primes")->default_val("2,3,5");
  chc->callback([&] {
    action = [&] {
      CharFixture f;
      if (!xfix.empty()) {
        if (!xin.ideal.empty() || !xin.ideal_file.empty()) throw InvalidArgument("give --fixture or an ideal, not both");
        f = parse_fixture(xfix);
      } else {
        f = IdealFixture{split_names(xin.ring), xin.text()};
      }
      return char_compare(f, parse_primes(xprimes)).report();
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    Report rep = action();
    auto j = rep.to_json();
    if (timing) j["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto text = j.dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path);
      if (!f) throw InvalidArgument("cannot write '" + out_path + "'");
      f << text;
    }
    return rep.verdict() ? 0 : 1;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vero
