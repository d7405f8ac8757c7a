// qtau: exact quantum 3-manifold invariants from surgery presentations.
//
// Subcommands:
//   invariant  compute tau in one or all flavors for a manifold spec
//   verify     run a named theorem-check suite over its grid
//   series     Ohtsuki perturbative series with per-prime residue tables
//
// Exit codes: 0 success, 1 check failure, 2 bad input, 3 resource limit.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtau/lattice.hpp"
#include "qtau/manifold.hpp"
#include "qtau/perturbative.hpp"
#include "qtau/spec_json.hpp"
#include "qtau/weyl_sums.hpp"

using namespace qtau;
using nlohmann::json;

namespace {

struct JobConfig {
    std::string algebra = "A1";
    int rank_override = 0;
    long r = 5;
    long zeta_exponent = 1;
    std::string flavor = "all";
    std::string spec_path;
    int order = 4;
    std::string primes = "7,11,13";
    std::vector<long> r_list;
    int digits = 8;
    bool reproducible = false;
    std::string out_path;
    Limits limits;
};

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

RsPtr build_algebra(const JobConfig& cfg) {
    auto [t, rank] = parse_algebra(cfg.algebra);
    if (cfg.rank_override > 0) rank = cfg.rank_override;
    return RootSystem::build(t, rank, cfg.limits);
}

json exact_value_json(const CycNum& v, long a) {
    json j;
    j["m"] = v.field()->m();
    j["zeta_exponent"] = a;
    std::vector<std::string> coeffs;
    for (const auto& c : v.coeffs()) coeffs.push_back(rat_to_string(c));
    j["coeffs"] = coeffs;
    return j;
}

json approx_json(const CycNum& v, int digits) {
    auto [re, im] = v.approx();
    char buf[64];
    json j;
    std::snprintf(buf, sizeof buf, "%.*g", digits, re);
    j["re"] = std::string(buf);
    std::snprintf(buf, sizeof buf, "%.*g", digits, im);
    j["im"] = std::string(buf);
    return j;
}

void emit(const JobConfig& cfg, json& record,
          const std::chrono::steady_clock::time_point& t0) {
    if (!cfg.reproducible) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        record["timing_ms"] = ms;
    }
    std::string text = record.dump(2) + "\n";
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) throw invalid_input_error("cannot write output file: " + cfg.out_path);
        out << text;
    }
}

json flavor_result_json(const JobConfig& cfg, const RootSystem& rs, const ManifoldSpec& spec,
                        Flavor fl) {
    long a = fl == Flavor::Projective ? mod_nonneg(cfg.zeta_exponent, cfg.r) : cfg.zeta_exponent;
    InvariantResult res = tau(spec, rs, cfg.r, a, fl, cfg.limits);
    json j;
    j["flavor"] = fl == Flavor::Full ? "full" : fl == Flavor::Projective ? "projective" : "center";
    j["defined"] = res.defined;
    j["value"] = exact_value_json(res.value, a);
    j["approx"] = approx_json(res.value, cfg.digits);
    j["signature"] = {{"positive", res.sig.positive},
                      {"negative", res.sig.negative},
                      {"zero", res.sig.zero}};
    if (fl == Flavor::Projective) {
        std::vector<Int> coeffs;
        j["integral"] = res.value.integer_coeffs(&coeffs);
    }
    return j;
}

int cmd_invariant(const JobConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    auto rs = build_algebra(cfg);
    ManifoldSpec spec = load_manifold_spec(cfg.spec_path);
    json record;
    record["job"] = {{"command", "invariant"}, {"algebra", rs->name()}, {"r", cfg.r},
                     {"zeta_exponent", cfg.zeta_exponent}, {"spec", spec.name},
                     {"flavor", cfg.flavor}};
    record["results"] = json::array();
    std::vector<Flavor> flavors;
    if (cfg.flavor == "all")
        flavors = {Flavor::Full, Flavor::Projective, Flavor::Center};
    else if (cfg.flavor == "full")
        flavors = {Flavor::Full};
    else if (cfg.flavor == "projective")
        flavors = {Flavor::Projective};
    else if (cfg.flavor == "center")
        flavors = {Flavor::Center};
    else
        throw invalid_input_error("unknown flavor: " + cfg.flavor);
    for (Flavor fl : flavors)
        record["results"].push_back(flavor_result_json(cfg, *rs, spec, fl));
    emit(cfg, record, t0);
    return 0;
}

// ---- verify suites -------------------------------------------------------

struct SuiteOutcome {
    long cases = 0, failures = 0;
    json detail = json::array();
    void record(const std::string& label, bool pass) {
        ++cases;
        if (!pass) ++failures;
        detail.push_back({{"case", label}, {"pass", pass}});
    }
};

std::vector<long> suite_levels(const JobConfig& cfg) {
    if (!cfg.r_list.empty()) return cfg.r_list;
    return {cfg.r};
}

void suite_symmetry(const JobConfig& cfg, SuiteOutcome& out, bool second) {
    auto rs = build_algebra(cfg);
    std::mt19937 rng(12345);
    struct Case { FramedLink link; std::vector<Weight> colors; };
    std::vector<Case> cases;
    if (rs->rank() == 1 && rs->type() == LieType::A) {
        cases.push_back({make_hopf(1, 0), {Weight({1}), Weight({2})}});
        cases.push_back({make_trefoil(Chirality::Right, 0), {Weight({2})}});
    } else {
        std::vector<long> ones(rs->rank(), 1);
        std::vector<long> mixed(rs->rank(), 1);
        mixed[0] = 2;
        cases.push_back({make_hopf(1, 0), {Weight(ones), Weight(mixed)}});
        cases.push_back({make_hopf(2, 2), {Weight(mixed), Weight(ones)}});
    }
    for (long r : suite_levels(cfg)) {
        LatticeDomain dom{rs.get(), r};
        for (const auto& cs : cases) {
            if (!second) {
                std::uniform_int_distribution<int> coin(0, 1);
                std::uniform_int_distribution<long> off(-2, 2);
                std::uniform_int_distribution<int> pick(0, rs->rank() - 1);
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<Weight> images = cs.colors;
                    Weight& w = images[trial % images.size()];
                    for (int step = 0; step < 3; ++step) {
                        if (coin(rng)) w = rs->apply(rs->simple_reflection(pick(rng)), w);
                        else
                            for (int j = 0; j < rs->rank(); ++j)
                                w = w + rs->simple_roots()[j].scaled(off(rng) * r);
                    }
                    bool ok = symmetry1_check(*rs, r, cfg.zeta_exponent, cs.link, cs.colors,
                                              images, cfg.limits);
                    out.record("symmetry1 r=" + std::to_string(r) + " trial " +
                                   std::to_string(trial),
                               ok);
                }
            } else {
                std::vector<Weight> alcove;
                for (const Weight& mu : cs.colors) alcove.push_back(affine_reduce(dom, mu).rep);
                auto elems = rs->center_elements();
                int m = cs.link.component_count();
                std::vector<size_t> idx(m, 0);
                while (true) {
                    std::vector<CenterElement> gs;
                    for (int i = 0; i < m; ++i) gs.push_back(elems[idx[i]]);
                    bool ok = symmetry2_check(*rs, r, cfg.zeta_exponent, cs.link, alcove, gs,
                                              cfg.limits);
                    out.record("symmetry2 r=" + std::to_string(r), ok);
                    int i = 0;
                    for (; i < m; ++i) {
                        if (++idx[i] < elems.size()) break;
                        idx[i] = 0;
                    }
                    if (i == m) break;
                }
            }
        }
    }
}

void suite_splitting(const JobConfig& cfg, SuiteOutcome& out) {
    auto rs = build_algebra(cfg);
    std::vector<ManifoldSpec> specs;
    auto push = [&](FramedLink l, const char* n) {
        ManifoldSpec s;
        s.name = n;
        s.components.push_back(std::move(l));
        specs.push_back(std::move(s));
    };
    push(make_unknot(2), "U2");
    push(make_unknot(-3), "U-3");
    push(make_hopf(2, 2), "hopf22");
    if (rs->rank() == 1 && rs->type() == LieType::A) {
        push(make_trefoil(Chirality::Left, -1), "poincare");
        push(make_fig8(1), "fig8+1");
    }
    for (long r : suite_levels(cfg))
        for (const auto& spec : specs) {
            bool ok = splitting_check(spec, *rs, r, cfg.zeta_exponent, cfg.limits);
            out.record(spec.name + " r=" + std::to_string(r), ok);
        }
}

void suite_integrality(const JobConfig& cfg, SuiteOutcome& out) {
    auto rs = build_algebra(cfg);
    std::vector<ManifoldSpec> specs;
    auto push = [&](FramedLink l, const std::string& n) {
        ManifoldSpec s;
        s.name = n;
        s.components.push_back(std::move(l));
        specs.push_back(std::move(s));
    };
    for (long b : {2L, -3L}) push(make_unknot(b), "U" + std::to_string(b));
    push(make_hopf(2, 2), "hopf22");
    if (rs->rank() == 1 && rs->type() == LieType::A) {
        push(make_trefoil(Chirality::Left, -1), "poincare");
        push(make_trefoil(Chirality::Right, -1), "sigma237");
        push(make_fig8(-1), "fig8-1");
    }
    for (long r : suite_levels(cfg)) {
        if (!is_prime_long(r) || r % 2 == 0 || (rs->weyl_order() * rs->det_cartan()) % r == 0)
            continue;
        for (const auto& spec : specs) {
            if (spec.homology_order() == 0) continue;
            InvariantResult t =
                tau(spec, *rs, r, mod_nonneg(cfg.zeta_exponent, r), Flavor::Projective,
                    cfg.limits);
            out.record(spec.name + " r=" + std::to_string(r),
                       t.defined && t.value.integer_coeffs());
        }
    }
}

void suite_smatrix(const JobConfig& cfg, SuiteOutcome& out) {
    auto rs = build_algebra(cfg);
    for (long r : suite_levels(cfg))
        out.record(rs->name() + " r=" + std::to_string(r),
                   s_matrix_check(*rs, r, cfg.zeta_exponent));
}

void suite_kirby(const JobConfig& cfg, SuiteOutcome& out) {
    auto rs = build_algebra(cfg);
    if (rs->rank() != 1 || rs->type() != LieType::A)
        throw invalid_input_error("kirby suite runs on A1 (its presentations are sl2 links)");
    ManifoldSpec h22, um3, tre_sp, tre_br;
    h22.components.push_back(make_hopf(2, 2));
    um3.components.push_back(make_unknot(-3));
    tre_sp.components.push_back(make_trefoil(Chirality::Right, 1));
    tre_br.components.push_back(FramedLink{BraidLink{2, {1, 1, 1}, {1}, {0, 0}}});
    for (long r : suite_levels(cfg)) {
        for (Flavor fl : {Flavor::Full, Flavor::Projective, Flavor::Center}) {
            long a = fl == Flavor::Projective ? mod_nonneg(cfg.zeta_exponent, r)
                                              : cfg.zeta_exponent;
            out.record("hopf22 vs U-3 r=" + std::to_string(r),
                       kirby_equivalence_check(h22, um3, *rs, r, a, fl, cfg.limits));
        }
        for (Flavor fl : {Flavor::Full, Flavor::Projective}) {
            long a = fl == Flavor::Projective ? mod_nonneg(cfg.zeta_exponent, r)
                                              : cfg.zeta_exponent;
            out.record("trefoil special vs braid r=" + std::to_string(r),
                       kirby_equivalence_check(tre_sp, tre_br, *rs, r, a, fl, cfg.limits));
        }
    }
}

void suite_gauss_vanish(const JobConfig& cfg, SuiteOutcome& out) {
    auto rs = build_algebra(cfg);
    for (long r : suite_levels(cfg)) {
        auto f = CycField::make(2 * rs->D() * r);
        bool zero = gauss_full(*rs, r, f, cfg.zeta_exponent).value.is_zero();
        // reference prediction: zero iff r odd and (C_l, or B_l with even l)
        bool predicted = (r % 2 == 1) &&
                         (rs->type() == LieType::C ||
                          (rs->type() == LieType::B && rs->rank() % 2 == 0));
        out.record(rs->name() + " r=" + std::to_string(r) + (zero ? " zero" : " nonzero"),
                   zero == predicted);
    }
}

OhtsukiSeries series_for_spec(const RootSystem& rs, const ManifoldSpec& spec, int order);

void suite_congruence(const JobConfig& cfg, SuiteOutcome& out) {
    auto rs = build_algebra(cfg);
    ManifoldSpec spec = load_manifold_spec(cfg.spec_path);
    OhtsukiSeries series = series_for_spec(*rs, spec, cfg.order);
    for (long r : parse_long_list(cfg.primes))
        out.record(spec.name + " r=" + std::to_string(r),
                   congruence_check(series, spec, *rs, r, cfg.order,
                                    mod_nonneg(cfg.zeta_exponent, r), cfg.limits));
}

int cmd_verify(const JobConfig& cfg, const std::string& suite) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteOutcome out;
    if (suite == "symmetry1") suite_symmetry(cfg, out, false);
    else if (suite == "symmetry2") suite_symmetry(cfg, out, true);
    else if (suite == "splitting") suite_splitting(cfg, out);
    else if (suite == "integrality") suite_integrality(cfg, out);
    else if (suite == "smatrix") suite_smatrix(cfg, out);
    else if (suite == "kirby") suite_kirby(cfg, out);
    else if (suite == "gauss-vanish") suite_gauss_vanish(cfg, out);
    else if (suite == "congruence") suite_congruence(cfg, out);
    else throw invalid_input_error("unknown suite: " + suite);

    json record;
    record["job"] = {{"command", "verify"}, {"suite", suite}, {"algebra", cfg.algebra},
                     {"zeta_exponent", cfg.zeta_exponent}};
    record["cases"] = out.cases;
    record["failures"] = out.failures;
    record["detail"] = out.detail;
    emit(cfg, record, t0);
    return out.failures == 0 ? 0 : 1;
}

// ---- series --------------------------------------------------------------

// Supported shapes per presentation: unknot with b != 0 (lens series, any
// algebra) and sl2 trefoil / figure-eight with framing +-1.  Split unions and
// connected sums multiply.
OhtsukiSeries one_link_series(const RootSystem& rs, const FramedLink& link, int order) {
    if (!link.is_special())
        throw invalid_input_error("series: braid presentations are not in the supported family");
    const SpecialLink& sp = link.special();
    switch (sp.kind) {
        case SpecialLink::Kind::Unknot:
            if (sp.framings[0] == 0)
                throw invalid_input_error(
                    "series: 0-framed unknot is not a rational homology sphere");
            return ohtsuki_lens(rs, sp.framings[0], order);
        case SpecialLink::Kind::Trefoil:
        case SpecialLink::Kind::FigureEight: {
            if (rs.type() != LieType::A || rs.rank() != 1)
                throw invalid_input_error("series: knot surgeries need the A1 algebra");
            if (sp.framings[0] != 1 && sp.framings[0] != -1)
                throw invalid_input_error("series: knot framing must be +1 or -1");
            KnotKind k = sp.kind == SpecialLink::Kind::FigureEight
                             ? KnotKind::FigureEight
                             : (sp.chirality == Chirality::Left ? KnotKind::TrefoilLeft
                                                                : KnotKind::TrefoilRight);
            return ohtsuki_knot_sl2(k, (int)sp.framings[0], order);
        }
        case SpecialLink::Kind::Hopf:
            throw invalid_input_error("series: Hopf surgeries are outside the supported family");
    }
    throw invalid_input_error("series: bad link");
}

OhtsukiSeries series_for_spec(const RootSystem& rs, const ManifoldSpec& spec, int order) {
    if (spec.homology_order() == 0)
        throw invalid_input_error("series: spec is not a rational homology sphere");
    PowerSeries t = PowerSeries::one(order);
    SeriesProvenance prov = SeriesProvenance::Composition;
    long parts = 0;
    for (const auto& link : spec.components) {
        OhtsukiSeries s = one_link_series(rs, link, order);
        t = t * s.t;
        prov = s.provenance;
        ++parts;
    }
    for (const auto& child : spec.connected_sum) {
        OhtsukiSeries s = series_for_spec(rs, child, order);
        t = t * s.t;
        ++parts;
    }
    return OhtsukiSeries{t, parts == 1 ? prov : SeriesProvenance::Composition};
}

int cmd_series(const JobConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    auto rs = build_algebra(cfg);
    ManifoldSpec spec = load_manifold_spec(cfg.spec_path);
    OhtsukiSeries series = series_for_spec(*rs, spec, cfg.order);
    json record;
    record["job"] = {{"command", "series"}, {"algebra", rs->name()}, {"spec", spec.name},
                     {"order", cfg.order}};
    std::vector<std::string> coeffs;
    for (const auto& c : series.t.c) coeffs.push_back(rat_to_string(c));
    record["coefficients"] = coeffs;
    record["h1_order"] = spec.homology_order().get_str();
    record["residues"] = json::array();
    bool all_pass = true;
    for (long r : parse_long_list(cfg.primes)) {
        InvariantResult t = tau(spec, *rs, r, 1, Flavor::Projective, cfg.limits);
        PrimeExpansion pe = prime_expand(t.value, r, 1, cfg.order);
        bool pass = congruence_check(series, spec, *rs, r, cfg.order, 1, cfg.limits);
        all_pass &= pass;
        record["residues"].push_back({{"r", r},
                                      {"c_rn_mod_r", pe.residues},
                                      {"congruence_pass", pass}});
    }
    emit(cfg, record, t0);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum 3-manifold invariants from surgery presentations"};
    app.require_subcommand(1);
    JobConfig cfg;
    std::string suite;
    std::string r_list_text;

    auto add_common = [&](CLI::App* sub, bool need_spec) {
        sub->add_option("--algebra", cfg.algebra, "Lie algebra, e.g. A1, A2, B2, G2");
        sub->add_option("--rank", cfg.rank_override, "override the rank digit");
        sub->add_option("--r", r_list_text, "shifted level(s), comma separated");
        sub->add_option("--zeta-exponent", cfg.zeta_exponent, "exponent a selecting zeta = x^a");
        sub->add_option("--digits", cfg.digits, "digits in decimal approximations");
        sub->add_option("--out", cfg.out_path, "write the JSON record to this file");
        sub->add_flag("--reproducible", cfg.reproducible, "omit timing from the output");
        sub->add_option("--max-weyl", cfg.limits.max_weyl, "Weyl group size limit");
        sub->add_option("--max-enumeration", cfg.limits.max_enumeration,
                        "lattice enumeration limit");
        sub->add_option("--max-braid-dim", cfg.limits.max_braid_dim,
                        "braid tensor dimension limit");
        auto* opt = sub->add_option("--spec", cfg.spec_path, "manifold spec JSON file");
        if (need_spec) opt->required();
    };

    CLI::App* inv = app.add_subcommand("invariant", "compute tau for a manifold spec");
    add_common(inv, true);
    inv->add_option("--flavor", cfg.flavor, "full | projective | center | all");

    CLI::App* ver = app.add_subcommand("verify", "run a theorem-check suite");
    ver->add_option("suite", suite,
                    "symmetry1 | symmetry2 | splitting | integrality | smatrix | kirby | "
                    "gauss-vanish | congruence")
        ->required();
    add_common(ver, false);
    ver->add_option("--primes", cfg.primes, "prime list for congruence");
    ver->add_option("--order", cfg.order, "truncation order");

    CLI::App* ser = app.add_subcommand("series", "Ohtsuki series with residue tables");
    add_common(ser, true);
    ser->add_option("--order", cfg.order, "truncation order N");
    ser->add_option("--primes", cfg.primes, "primes for the residue table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!r_list_text.empty()) {
            cfg.r_list = parse_long_list(r_list_text);
            if (!cfg.r_list.empty()) cfg.r = cfg.r_list[0];
        }
        if (inv->parsed()) return cmd_invariant(cfg);
        if (ver->parsed()) return cmd_verify(cfg, suite);
        if (ser->parsed()) return cmd_series(cfg);
    } catch (const invalid_input_error& e) {
        std::cerr << "error (bad input): " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error (resource): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error (check): " << e.what() << "\n";
        return 1;
    }
    return 2;
}
