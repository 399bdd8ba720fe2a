#include <CLI11.hpp>
#include <json.hpp>

#include "gl2rep/adjoint.hpp"
#include "gl2rep/distributions.hpp"
#include "gl2rep/morphism.hpp"
#include "gl2rep/points.hpp"
#include "gl2rep/suite.hpp"
#include "gl2rep/weights.hpp"

using namespace gl2rep;
using nlohmann::ordered_json;

namespace {

struct CliResult {
    std::string name;
    std::string status;  // pass, fail or info
    std::string details;
};

struct Output {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CliResult> results;

    void param(const std::string& k, const std::string& v) { params.push_back({k, v}); }
    void add(const Report& rep) {
        for (auto& c : rep.checks) results.push_back({c.name, c.pass ? "pass" : "fail", c.details});
    }
    void info(const std::string& name, const std::string& details) {
        results.push_back({name, "info", details});
    }

    int finish(bool json) const {
        bool ok = true;
        for (auto& r : results)
            if (r.status == "fail") ok = false;
        if (json) {
            ordered_json out;
            out["command"] = command;
            out["params"] = ordered_json::object();
            for (auto& [k, v] : params) out["params"][k] = v;
            out["results"] = ordered_json::array();
            for (auto& r : results)
                out["results"].push_back({{"name", r.name}, {"status", r.status},
                                          {"details", r.details}});
            out["version"] = "1.0.0";
            std::printf("%s\n", out.dump(2).c_str());
        } else {
            for (auto& r : results) {
                if (r.status == "info")
                    std::printf("%s: %s\n", r.name.c_str(), r.details.c_str());
                else
                    std::printf("%s %s%s%s\n", r.status == "pass" ? "PASS" : "FAIL",
                                r.name.c_str(), r.details.empty() ? "" : " - ",
                                r.details.c_str());
            }
        }
        return ok ? 0 : 1;
    }
};

Ring parse_ring(const std::string& s) {
    if (s == "Z") return Ring::integers();
    if (s == "Q") return Ring::rationals();
    if (s.size() > 1 && s[0] == 'F') return Ring::prime_field(std::stol(s.substr(1)));
    if (s.size() > 4 && s.rfind("Zmod", 0) == 0) return Ring::mod_ring(std::stol(s.substr(4)));
    throw CLI::ValidationError("--ring", "expected Z, Q, F<p> or Zmod<n>");
}

HopfAlgebra full_hopf(const std::string& group, Ring ring) {
    return group == "sl2" ? HopfAlgebra::sl2_full(ring) : HopfAlgebra::gl2_full(ring);
}

Comodule build_spec(const std::string& spec, const std::string& group, Ring ring) {
    if (spec.rfind("dual:", 0) == 0)
        return dual(build_spec(spec.substr(5), group, ring));
    if (spec == "adjoint")
        return group == "sl2" ? adjoint_sl2(ring) : adjoint_gl2_points(ring);
    HopfAlgebra h = full_hopf(group, ring);
    Comodule v = standard(h, Comodule::Side::HopfRight);
    if (spec == "standard") return v;
    if (spec == "symtensor2") return sym_tensor2(v);
    if (spec.rfind("sym", 0) == 0) return sym_power(v, std::stoi(spec.substr(3)));
    throw CLI::ValidationError("comodule spec",
                               "expected standard, sym<d>, symtensor2, dual:<spec> or adjoint");
}

Comodule to_carrier(const Comodule& w, const std::string& group, const std::string& carrier) {
    if (carrier == "g") return w;
    Ring ring = w.hopf.ring();
    bool sl2 = group == "sl2";
    HopfAlgebra full = sl2 ? HopfAlgebra::sl2_full(ring) : HopfAlgebra::gl2_full(ring);
    if (carrier == "n")
        return restrict_along(
            w, QuotientMap::to_n(full, sl2 ? HopfAlgebra::sl2_n(ring)
                                           : HopfAlgebra::gl2_n(ring)));
    if (carrier == "t")
        return restrict_along(
            w, QuotientMap::to_t(full, sl2 ? HopfAlgebra::sl2_t(ring)
                                           : HopfAlgebra::gl2_t(ring)));
    throw CLI::ValidationError("--carrier", "expected g, n or t");
}

PointGroupKind parse_point_group(const std::string& s) {
    if (s == "gl2") return PointGroupKind::GL2;
    if (s == "sl2") return PointGroupKind::SL2;
    if (s == "t") return PointGroupKind::T;
    if (s == "n") return PointGroupKind::N;
    if (s == "nmodt") return PointGroupKind::NmodT;
    throw CLI::ValidationError("--group", "expected gl2, sl2, t, n or nmodt");
}

int cmd_verify(const std::string& what, const std::string& group, const std::string& ring_s,
               int dmax, bool json) {
    Output out;
    out.command = "verify";
    out.param("what", what);
    Ring ring = parse_ring(ring_s);
    if (what == "hopf") {
        out.param("group", group);
        out.param("ring", ring_s);
        bool sl2 = group == "sl2";
        for (const HopfAlgebra& h :
             {full_hopf(group, ring), sl2 ? HopfAlgebra::sl2_n(ring) : HopfAlgebra::gl2_n(ring),
              sl2 ? HopfAlgebra::sl2_t(ring) : HopfAlgebra::gl2_t(ring),
              HopfAlgebra::nmodt(ring)}) {
            Report rep = h.verify_axioms();
            out.results.push_back(
                {h.name() + " axioms", rep.all_pass() ? "pass" : "fail", ""});
        }
    } else if (what == "quotient") {
        out.param("group", group);
        bool sl2 = group == "sl2";
        Ring z = Ring::integers();
        HopfAlgebra n = sl2 ? HopfAlgebra::sl2_n(z) : HopfAlgebra::gl2_n(z);
        HopfAlgebra t = sl2 ? HopfAlgebra::sl2_t(z) : HopfAlgebra::gl2_t(z);
        out.add(invariant_subalgebra_check(n, t, 4));
        out.add(free_basis_check(n, 4));
        out.add(weyl_constant_scheme_check(z));
    } else if (what == "all") {
        out.param("dmax", std::to_string(dmax));
        SuiteOptions opts;
        opts.d_characters = 2 * dmax;
        opts.d_closure = dmax + 4;
        opts.d_irreducible = dmax;
        for (auto& cr : run_acceptance_suite(opts))
            out.results.push_back({cr.name, cr.pass() ? "pass" : "fail",
                                   cr.report.all_pass() ? "" : "a sub-check failed"});
    } else {
        throw CLI::ValidationError("verify", "expected hopf, quotient or all");
    }
    return out.finish(json);
}

int cmd_character(int d, bool refined, bool json) {
    Output out;
    out.command = "character";
    out.param("d", std::to_string(d));
    out.param("refined", refined ? "true" : "false");
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z), gt = HopfAlgebra::gl2_t(z);
    Comodule wt = restrict_along(sym_power(standard(gl, Comodule::Side::HopfLeft), d),
                                 QuotientMap::to_t(gl, gt));
    auto ws = extract_weights(wt);
    std::vector<std::string> vars{"x1", "x2"};
    out.info("character", character(ws).to_string(vars));
    if (refined) {
        auto orbits = weyl_orbits(ws);
        for (size_t i = 0; i < orbits.size(); ++i)
            out.info("block " + std::to_string(i),
                     refined_character(d, orbits[i][0]).to_string(vars));
    }
    return out.finish(json);
}

int cmd_iso(const std::string& left, const std::string& right, const std::string& group,
            const std::string& ring_s, const std::string& carrier, bool json) {
    Output out;
    out.command = "iso";
    out.param("left", left);
    out.param("right", right);
    out.param("group", group);
    out.param("ring", ring_s);
    out.param("carrier", carrier);
    Ring ring = parse_ring(ring_s);
    Comodule w1 = to_carrier(build_spec(left, group, ring), group, carrier);
    Comodule w2 = to_carrier(build_spec(right, group, ring), group, carrier);
    out.info("hom dimension", std::to_string(hom_space(w1, w2).size()));
    IsoResult r = iso_exists(w1, w2);
    switch (r.status) {
        case IsoResult::Status::Found: {
            std::string u;
            for (size_t i = 0; i < r.witness.u.size(); ++i) {
                u += i ? "; " : "[";
                for (size_t j = 0; j < r.witness.u[i].size(); ++j)
                    u += (j ? " " : "") + r.witness.u[i][j].get_str();
            }
            out.results.push_back({"verdict", "pass", "isomorphic, witness " + u + "]"});
            break;
        }
        case IsoResult::Status::None:
            out.results.push_back({"verdict", "pass", "not isomorphic: " + r.detail});
            break;
        case IsoResult::Status::Undecided:
            out.results.push_back({"verdict", "fail", "undecided: " + r.detail});
            break;
    }
    return out.finish(json);
}

int cmd_adjoint(const std::string& group, const std::string& ring_s, bool json) {
    Output out;
    out.command = "adjoint";
    out.param("group", group);
    out.param("ring", ring_s);
    Ring ring = parse_ring(ring_s);
    if (group == "sl2") {
        out.add(adjoint_sl2_check(ring));
    } else {
        out.add(adjoint_equality(ring));
        out.add(adjoint_restrictions(ring));
    }
    return out.finish(json);
}

int cmd_bracket_table(const std::string& group, const std::string& ring_s, bool json) {
    Output out;
    out.command = "bracket-table";
    out.param("group", group);
    out.param("ring", ring_s);
    Ring ring = parse_ring(ring_s);
    Dist1Algebra d = group == "sl2" ? Dist1Algebra::sl2(ring) : Dist1Algebra::gl2(ring);
    auto t = d.bracket_table();
    for (int i = 0; i < d.dim(); ++i)
        for (int j = i + 1; j < d.dim(); ++j)
            out.info("[z" + std::to_string(i) + ", z" + std::to_string(j) + "]",
                     d.to_string(t[i][j]));
    return out.finish(json);
}

int cmd_points(const std::string& group, long mod, const std::string& verify, bool json) {
    Output out;
    out.command = "points";
    out.param("group", group);
    out.param("mod", std::to_string(mod));
    PointGroupKind kind = parse_point_group(group);
    if (verify.empty()) {
        out.info("order", std::to_string(enumerate_points(kind, mod).elements.size()));
    } else {
        out.param("verify", verify);
        if (verify == "law")
            out.add(hopf_points_consistency(kind, mod));
        else if (verify == "normalizer")
            out.add(normalizer_check(mod));
        else if (verify == "splitting")
            out.add(splitting_check(mod));
        else if (verify == "roots")
            out.add(root_coroot_check(mod));
        else
            throw CLI::ValidationError("--verify",
                                       "expected law, normalizer, splitting or roots");
    }
    return out.finish(json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic verification of GL2/SL2 Hopf algebras and comodules"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string what = "all", group = "gl2", ring = "Z", carrier = "g";
    std::string left = "standard", right = "standard", pverify;
    int d = 2, dmax = 8;
    long mod = 3;
    bool refined = false;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("what", what, "hopf, quotient or all");
    verify->add_option("--group", group, "gl2 or sl2");
    verify->add_option("--ring", ring, "Z, Q, F<p> or Zmod<n>");
    verify->add_option("--dmax", dmax, "degree cap for the sweeps");

    auto* character = app.add_subcommand("character", "characters of symmetric powers");
    character->add_option("--d", d, "symmetric power degree")->required();
    character->add_flag("--refined", refined, "list the orbit-block characters");

    auto* iso = app.add_subcommand("iso", "solve for comodule isomorphisms");
    iso->add_option("--left", left, "comodule spec")->required();
    iso->add_option("--right", right, "comodule spec")->required();
    iso->add_option("--group", group, "gl2 or sl2");
    iso->add_option("--ring", ring, "Z, Q, F<p> or Zmod<n>");
    iso->add_option("--carrier", carrier, "g, n or t");

    auto* adjoint = app.add_subcommand("adjoint", "verify the adjoint representation");
    adjoint->add_option("--group", group, "gl2 or sl2");
    adjoint->add_option("--ring", ring, "Z, Q, F<p> or Zmod<n>");

    auto* bracket = app.add_subcommand("bracket-table", "first-order distribution brackets");
    bracket->add_option("--group", group, "gl2 or sl2");
    bracket->add_option("--ring", ring, "Z, Q, F<p> or Zmod<n>");

    auto* points = app.add_subcommand("points", "finite-ring point groups");
    points->add_option("--group", group, "gl2, sl2, t, n or nmodt");
    points->add_option("--mod", mod, "modulus of Z/n")->required();
    points->add_option("--verify", pverify, "law, normalizer, splitting or roots");

    for (auto* sc : {verify, character, iso, adjoint, bracket, points})
        sc->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(what, group, ring, dmax, json);
        if (character->parsed()) return cmd_character(d, refined, json);
        if (iso->parsed()) return cmd_iso(left, right, group, ring, carrier, json);
        if (adjoint->parsed()) return cmd_adjoint(group, ring, json);
        if (bracket->parsed()) return cmd_bracket_table(group, ring, json);
        if (points->parsed()) return cmd_points(group, mod, pverify, json);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
