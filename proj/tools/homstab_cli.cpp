// Command-line front-end.  Every command prints one JSON document (or, with
// --csv, one CSV table) on standard output and exits 0; errors print a JSON
// error object and exit 2 (usage), 3 (domain) or 4 (internal).  Output is
// byte-stable across runs for identical inputs.

#include <homstab/braid.hpp>
#include <homstab/chains.hpp>
#include <homstab/coeffsys.hpp>
#include <homstab/destab.hpp>
#include <homstab/foxhom.hpp>
#include <homstab/ranges.hpp>
#include <homstab/reptheory.hpp>
#include <homstab/stabmod.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <iostream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace homstab;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "4" or "2..6", inclusive on both ends
std::pair<int, int> parse_span(const std::string& text) {
    auto number = [&](const std::string& s) {
        try {
            size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw UsageError("bad value in range \"" + text + "\", expected N or LO..HI");
        }
    };
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        int v = number(text);
        return {v, v};
    }
    int lo = number(text.substr(0, dots));
    int hi = number(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range \"" + text + "\"");
    return {lo, hi};
}

// comma-separated partition parts; empty means the empty partition
std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            parts.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw UsageError("bad partition \"" + text + "\", expected comma-separated parts");
        }
    }
    return parts;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (size_t j = 0; j < header.size(); ++j) out += (j ? "," : "") + csv_escape(header[j]);
    out += "\n";
    for (const auto& row : rows) {
        for (size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + csv_escape(row[j]);
        out += "\n";
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class K>
json matrix_json(const Mat<K>& m) {
    json rows = json::array();
    for (int i = 0; i < m.r; ++i) {
        json row = json::array();
        for (int j = 0; j < m.c; ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Runs fn(0..count-1), fanning out over worker threads when jobs > 1.
// Results must land in per-index slots; the first failing index wins.
template <class Fn>
void run_cells(int jobs, int count, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errs(count);
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int workers = std::min(jobs, count);
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

template <class Fn>
auto with_family(const std::string& name, Fn&& fn) {
    if (name == "sym") return fn(SymmetricFamily{});
    if (name == "braid") return fn(BraidFamily{});
    if (name == "wreath-z2") return fn(WreathFamily(cyclic_group(2)));
    if (name == "wreath-z3") return fn(WreathFamily(cyclic_group(3)));
    if (name == "wreath-z4") return fn(WreathFamily(cyclic_group(4)));
    if (name == "wreath-k4") return fn(WreathFamily(klein_four()));
    throw UsageError("unknown module \"" + name + "\"");
}

struct Options {
    bool csv = false;
    int jobs = 1;
    std::string module = "sym";
    std::string nspan = "2..6";
    std::string preset = "constant";
    int dim = 1;
    std::string lambda;
    int window = 6;
    int rmax = 3;
    bool dump_system = false;
    int i = 1;
    int fox_n = 3;
    std::string selector;
    int k = 2, r = 0, N = 0, u = 1, m = 0;
    std::string coeffs = "constant";
    std::string gcase = "p=q";
    std::string improved;
    std::string presentation = "braid";
    std::string rho = "trivial";
    std::string text;
    std::string object;
    int bound = -1;
    bool stable = false;
    int n_max = 4;
    int samples = 200;
};

std::string cmd_wrw(const Options& o) {
    auto [lo, hi] = parse_span(o.nspan);
    int count = hi - lo + 1;
    return with_family(o.module, [&](const auto& fam) {
        std::vector<std::vector<HomologyGroup>> homs(count);
        std::vector<int> conns(count);
        run_cells(o.jobs, count, [&](int idx) {
            SemiSimplicialSet s = build_wrw(fam, lo + idx);
            homs[idx] = reduced_homology(s);
            conns[idx] = homological_connectivity(s);
        });
        if (o.csv) {
            std::vector<std::vector<std::string>> rows;
            for (int idx = 0; idx < count; ++idx) {
                std::string n = std::to_string(lo + idx), conn = connectivity_str(conns[idx]);
                if (homs[idx].empty()) rows.push_back({n, "", "", "", conn});
                for (size_t i = 0; i < homs[idx].size(); ++i) {
                    std::string tor;
                    for (size_t t = 0; t < homs[idx][i].torsion.size(); ++t)
                        tor += (t ? ";" : "") + to_string(homs[idx][i].torsion[t]);
                    rows.push_back({n, std::to_string(i),
                                    std::to_string(homs[idx][i].free_rank), tor, conn});
                }
            }
            return csv_table({"n", "i", "rank", "torsion", "connectivity"}, rows);
        }
        json rows = json::array();
        for (int idx = 0; idx < count; ++idx) {
            json hom = json::array();
            for (size_t i = 0; i < homs[idx].size(); ++i) {
                json tor = json::array();
                for (const Int& t : homs[idx][i].torsion) tor.push_back(to_string(t));
                hom.push_back(
                    {{"i", i}, {"rank", homs[idx][i].free_rank}, {"torsion", std::move(tor)}});
            }
            rows.push_back({{"n", lo + idx},
                            {"connectivity", connectivity_str(conns[idx])},
                            {"homology", std::move(hom)}});
        }
        return dump({{"command", "wrw-homology"},
                     {"parameters", {{"module", o.module}, {"n", o.nspan}}},
                     {"payload", {{"rows", std::move(rows)}}}});
    });
}

template <class K>
json system_json(const CoeffSys<K>& F) {
    json rho = json::array();
    for (int n = 0; n <= F.n_max; ++n) {
        json per = json::array();
        for (const Mat<K>& g : F.rho[n]) per.push_back(matrix_json(g));
        rho.push_back(std::move(per));
    }
    json S = json::array();
    for (const Mat<K>& s : F.S) S.push_back(matrix_json(s));
    return {{"name", F.name},  {"field", FieldName<K>::value}, {"n_max", F.n_max},
            {"dims", F.dims},  {"rho", std::move(rho)},        {"S", std::move(S)}};
}

template <class K>
std::string degree_output(const Options& o, const json& params, const CoeffSys<K>& F) {
    DegreeReport rep = degree_report(F, o.rmax);
    json payload = {{"name", F.name},       {"field", FieldName<K>::value},
                    {"dims", F.dims},       {"verdict", to_string(rep.verdict)},
                    {"degree", rep.degree}, {"onset", rep.onset},
                    {"window", rep.window}, {"trace", rep.trace}};
    if (o.dump_system) payload["system"] = system_json(F);
    return dump({{"command", "coeff-degree"}, {"parameters", params}, {"payload", payload}});
}

std::string cmd_coeff_degree(const Options& o) {
    json params = {{"preset", o.preset}, {"window", o.window}, {"r_max", o.rmax}};
    if (o.preset == "constant") {
        params["dim"] = o.dim;
        return degree_output(o, params, make_constant(o.dim, o.window));
    }
    if (o.preset == "sign-zero") return degree_output(o, params, make_sign_zero(o.window));
    if (o.preset == "burau") return degree_output(o, params, make_burau(o.window));
    if (o.preset == "specht") {
        Partition lam(parse_parts(o.lambda));
        params["lambda"] = lam.str();
        return degree_output(o, params, make_specht_pullback(lam, o.window));
    }
    throw UsageError("unknown preset \"" + o.preset + "\"");
}

std::string cmd_multiplicity(const Options& o) {
    auto [lo, hi] = parse_span(o.nspan);
    Partition lam(parse_parts(o.lambda));
    int count = hi - lo + 1;
    std::vector<int> values(count);
    run_cells(o.jobs, count, [&](int idx) { values[idx] = multiplicity_h(lam, lo + idx, o.i); });
    if (o.csv) {
        std::vector<std::vector<std::string>> rows;
        for (int idx = 0; idx < count; ++idx)
            rows.push_back({lam.str(), std::to_string(lo + idx), std::to_string(o.i),
                            std::to_string(values[idx])});
        return csv_table({"lambda", "n", "i", "value"}, rows);
    }
    json rows = json::array();
    for (int idx = 0; idx < count; ++idx)
        rows.push_back(
            {{"lambda", lam.str()}, {"n", lo + idx}, {"i", o.i}, {"value", values[idx]}});
    return dump({{"command", "multiplicity"},
                 {"parameters",
                  {{"lambda", lam.str()},
                   {"i", o.i},
                   {"n", o.nspan},
                   {"onset", stabilization_onset(lam, o.i)}}},
                 {"payload", {{"rows", std::move(rows)}}}});
}

RangeQuery build_query(const Options& o) {
    RangeQuery q;
    bool found = false;
    for (RangeFamily f :
         {RangeFamily::general_constant, RangeFamily::general_abelian,
          RangeFamily::general_twisted, RangeFamily::general_split, RangeFamily::configurations,
          RangeFamily::oriented, RangeFamily::manifolds})
        if (o.selector == selector_name(f)) {
            q.family = f;
            found = true;
        }
    if (!found) throw UsageError("unknown selector \"" + o.selector + "\"");
    q.k = o.k;
    q.r = o.r;
    q.N = o.N;
    q.u = o.u;
    q.m = o.m;
    if (o.coeffs == "constant") q.coeffs = CoeffKind::constant;
    else if (o.coeffs == "abelian") q.coeffs = CoeffKind::abelian;
    else if (o.coeffs == "twisted") q.coeffs = CoeffKind::twisted;
    else if (o.coeffs == "split") q.coeffs = CoeffKind::split;
    else throw UsageError("unknown coefficient kind \"" + o.coeffs + "\"");
    if (o.gcase == "p=q") q.gcase = GenusCase::equal_factors;
    else if (o.gcase == "p<q") q.gcase = GenusCase::unequal_factors;
    else throw UsageError("unknown case \"" + o.gcase + "\", expected p=q or p<q");
    if (o.improved == "iso") q.improved_iso = true;
    else if (o.improved == "epi") q.improved_epi = true;
    else if (!o.improved.empty()) throw UsageError("unknown improvement \"" + o.improved + "\"");
    return q;
}

std::string cmd_ranges(const Options& o) {
    RangeQuery base = build_query(o);
    auto [lo, hi] = parse_span(o.nspan);
    std::vector<RangeRow> rows = range_sweep(grid_over_n(base, lo, hi));
    auto row_json = [](const RangeRow& w) {
        json j = {{"selector", selector_name(w.query.family)},
                  {"n", w.query.n},
                  {"k", w.query.k},
                  {"r", w.query.r},
                  {"N", w.query.N},
                  {"u", w.query.u},
                  {"m", w.query.m},
                  {"coeffs", coeff_name(w.query.coeffs)},
                  {"case", w.query.gcase == GenusCase::equal_factors ? "p=q" : "p<q"},
                  {"ok", w.ok}};
        if (w.ok) {
            j["iso_max"] = w.answer.iso_max_i;
            j["epi_max"] = w.answer.epi_max_i;
            j["note"] = w.answer.note;
        } else {
            j["error"] = w.error;
        }
        return j;
    };
    if (o.csv) {
        std::vector<std::vector<std::string>> table;
        for (const RangeRow& w : rows)
            table.push_back({selector_name(w.query.family), std::to_string(w.query.n),
                             std::to_string(w.query.k), std::to_string(w.query.r),
                             std::to_string(w.query.N), std::to_string(w.query.u),
                             std::to_string(w.query.m), coeff_name(w.query.coeffs),
                             w.query.gcase == GenusCase::equal_factors ? "p=q" : "p<q",
                             w.ok ? std::to_string(w.answer.iso_max_i) : "",
                             w.ok ? std::to_string(w.answer.epi_max_i) : "",
                             w.ok ? w.answer.note : "error: " + w.error});
        return csv_table({"selector", "n", "k", "r", "N", "u", "m", "coeffs", "case", "iso_max",
                          "epi_max", "note"},
                         table);
    }
    json params = {{"selector", o.selector}, {"n", o.nspan},         {"k", o.k},
                   {"r", o.r},               {"N", o.N},             {"u", o.u},
                   {"m", o.m},               {"coeffs", o.coeffs},   {"case", o.gcase},
                   {"improved", o.improved}};
    if (lo == hi) {
        if (!rows[0].ok) throw std::invalid_argument(rows[0].error);
        return dump({{"command", "ranges"},
                     {"parameters", params},
                     {"payload",
                      {{"selector", o.selector},
                       {"iso_max", rows[0].answer.iso_max_i},
                       {"epi_max", rows[0].answer.epi_max_i},
                       {"note", rows[0].answer.note}}}});
    }
    json jrows = json::array();
    for (const RangeRow& w : rows) jrows.push_back(row_json(w));
    return dump({{"command", "ranges"},
                 {"parameters", params},
                 {"payload", {{"rows", std::move(jrows)}}}});
}

std::string cmd_fox_h(const Options& o) {
    GroupPresentation P;
    std::string pname;
    if (!o.text.empty()) {
        P = parse_presentation(o.text);
        pname = "custom";
    } else if (o.presentation == "braid") {
        P = braid_presentation(o.fox_n);
        pname = "braid";
    } else if (o.presentation == "pure-braid") {
        P = pure_braid_presentation(o.fox_n);
        pname = "pure-braid";
    } else if (o.presentation == "sym") {
        P = symmetric_presentation(o.fox_n);
        pname = "sym";
    } else {
        throw UsageError("unknown presentation \"" + o.presentation + "\"");
    }
    json params = {{"presentation", pname}, {"n", o.fox_n}, {"rho", o.rho}, {"i", o.i}};
    Representation rep = Representation::scalars(P.gens, Rat(1));
    if (o.rho == "sign") rep = Representation::scalars(P.gens, Rat(-1));
    else if (o.rho == "specht") {
        Partition lam(parse_parts(o.lambda));
        params["lambda"] = lam.str();
        rep = specht_braid_rep(lam, o.fox_n);
    } else if (o.rho != "trivial") {
        throw UsageError("unknown coefficients \"" + o.rho + "\"");
    }
    int dim = twisted_homology(P, rep, o.i);
    return dump({{"command", "fox-h"},
                 {"parameters", params},
                 {"payload",
                  {{"gens", P.gens},
                   {"relators", (int)P.relators.size()},
                   {"rho_dim", rep.dim},
                   {"dim", dim}}}});
}

ObjectTable table_for(const std::string& module, int n_max) {
    if (module == "sym" || module == "braid" || module == "wreath-z2" ||
        module == "wreath-z3" || module == "wreath-z4" || module == "wreath-k4")
        return degree_table(module, n_max);
    if (module == "toy-above") return toy_above_table(2, n_max);
    if (module == "toy-merge") return toy_merge_table(n_max);
    if (module == "toy-localized") return toy_localized_table(n_max);
    throw UsageError("unknown module \"" + module + "\"");
}

std::string cmd_genus(const Options& o) {
    int n_max = o.n_max;
    ObjectTable t = table_for(o.module, n_max);
    int bound = o.bound < 0 ? n_max : o.bound;
    GenusResult g =
        o.stable ? stable_genus(t, o.object, bound) : genus(t, o.object, bound);
    std::string display = g.infinite ? "infinite"
                          : g.saturated ? ">=" + std::to_string(g.value)
                                        : std::to_string(g.value);
    return dump({{"command", "genus"},
                 {"parameters",
                  {{"module", o.module},
                   {"object", o.object},
                   {"bound", bound},
                   {"stable", o.stable},
                   {"n-max", n_max}}},
                 {"payload",
                  {{"infinite", g.infinite},
                   {"value", g.value},
                   {"saturated", g.saturated},
                   {"display", display}}}});
}

std::string cmd_check_module(const Options& o) {
    return with_family(o.module, [&](const auto& fam) {
        CheckReport inj = check_injectivity(fam, o.n_max, o.samples);
        ObjectTable t = degree_table(o.module, o.n_max);
        CheckReport canc = check_local_cancellation(t, "X^0", o.n_max);
        auto report_json = [](const CheckReport& r) {
            return json{{"passed", r.passed}, {"exact", r.exact}, {"notes", r.notes}};
        };
        return dump({{"command", "check-module"},
                     {"parameters",
                      {{"module", o.module}, {"n-max", o.n_max}, {"samples", o.samples}}},
                     {"payload",
                      {{"injectivity", report_json(inj)},
                       {"cancellation", report_json(canc)},
                       {"passed", inj.passed && canc.passed}}}});
    });
}

void print_error(const std::string& command, const std::string& kind, const std::string& message) {
    std::cout << dump(
        {{"command", command}, {"error", {{"kind", kind}, {"message", message}}}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stability toolkit: destabilization homology, coefficient degrees, "
                 "multiplicities, stability ranges and module checks"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--csv", o.csv, "print tables as CSV instead of JSON");
    app.add_option("--jobs", o.jobs, "worker threads for sweeps (default 1)")
        ->check(CLI::PositiveNumber);

    auto* wrw = app.add_subcommand("wrw-homology",
                                   "reduced homology and connectivity of the destabilization "
                                   "complexes of a module");
    wrw->add_option("--module", o.module,
                    "sym, braid, wreath-z2, wreath-z3, wreath-z4 or wreath-k4");
    wrw->add_option("--n", o.nspan, "degree or range LO..HI (default 2..6)");

    auto* cd = app.add_subcommand("coeff-degree", "polynomial degree of a coefficient system");
    cd->add_option("--preset", o.preset, "constant, sign-zero, burau or specht");
    cd->add_option("--dim", o.dim, "dimension for the constant preset");
    cd->add_option("--lambda", o.lambda, "partition for the specht preset, e.g. 2,1");
    cd->add_option("--window", o.window, "top degree of the window (default 6)");
    cd->add_option("--r-max", o.rmax, "largest degree to search (default 3)");
    cd->add_flag("--dump", o.dump_system, "include the full system, matrices as exact strings");

    auto* mult = app.add_subcommand("multiplicity",
                                    "multiplicity of a padded irreducible in braid homology");
    mult->add_option("--lambda", o.lambda, "partition, e.g. 1 or 1,1 (default empty)");
    mult->add_option("--i", o.i, "homological degree, 0 or 1");
    mult->add_option("--n", o.nspan, "degree or range LO..HI");

    auto* rg = app.add_subcommand("ranges", "stability range formulas");
    rg->add_option("--selector", o.selector,
                   "A-constant, A-abelian, B-twisted, B-split, C-config, D-oriented or "
                   "F-manifold")
        ->required();
    rg->add_option("--n", o.nspan, "point count or genus; a range LO..HI sweeps");
    rg->add_option("--k", o.k, "resolution slope (default 2)");
    rg->add_option("--r", o.r, "coefficient degree");
    rg->add_option("--N", o.N, "degree onset");
    rg->add_option("--u", o.u, "unitary stable rank input");
    rg->add_option("--m", o.m, "generator count or connectivity offset");
    rg->add_option("--coeffs", o.coeffs, "constant, abelian, twisted or split (C-config)");
    rg->add_option("--case", o.gcase, "p=q or p<q (F-manifold)");
    rg->add_option("--improved", o.improved, "iso or epi");

    auto* fox = app.add_subcommand("fox-h", "twisted group homology in degrees 0 and 1");
    fox->add_option("--presentation", o.presentation, "braid, pure-braid or sym");
    fox->add_option("--n", o.fox_n, "group index n");
    fox->add_option("--rho", o.rho, "trivial, sign or specht");
    fox->add_option("--lambda", o.lambda, "partition for specht coefficients");
    fox->add_option("--i", o.i, "homological degree, 0 or 1");
    fox->add_option("--text", o.text,
                    "custom presentation, e.g. \"gens: 2; rel: s1 s2 S1 S2\"");

    auto* gen = app.add_subcommand("genus", "genus and stable genus over an object table");
    gen->add_option("--module", o.module,
                    "sym, braid, wreath-*, toy-above, toy-merge or toy-localized");
    gen->add_option("--object", o.object, "object label, e.g. X^3")->required();
    gen->add_option("--bound", o.bound, "search bound (default: the table window)");
    gen->add_flag("--stable", o.stable, "compute the stable genus");
    gen->add_option("--n-max", o.n_max, "object table window (default 4)");

    auto* chk = app.add_subcommand("check-module",
                                   "stabilization injectivity and local cancellation checks");
    chk->add_option("--module", o.module,
                    "sym, braid, wreath-z2, wreath-z3, wreath-z4 or wreath-k4");
    chk->add_option("--n-max", o.n_max, "top degree to check (default 4)");
    chk->add_option("--samples", o.samples, "sample budget for non-enumerable groups");

    for (CLI::App* sub : {wrw, cd, mult, rg, fox, gen, chk}) sub->fallthrough();

    std::string command;
    try {
        app.parse(argc, argv);
        for (CLI::App* sub : {wrw, cd, mult, rg, fox, gen, chk})
            if (sub->parsed()) command = sub->get_name();
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        print_error(command, "usage", e.what());
        return 2;
    }

    try {
        std::string out;
        if (command == "wrw-homology") out = cmd_wrw(o);
        else if (command == "coeff-degree") out = cmd_coeff_degree(o);
        else if (command == "multiplicity") out = cmd_multiplicity(o);
        else if (command == "ranges") out = cmd_ranges(o);
        else if (command == "fox-h") out = cmd_fox_h(o);
        else if (command == "genus") out = cmd_genus(o);
        else out = cmd_check_module(o);
        std::cout << out;
        return 0;
    } catch (const UsageError& e) {
        print_error(command, "usage", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        print_error(command, "domain", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        print_error(command, "domain", e.what());
        return 3;
    } catch (const std::logic_error& e) {
        print_error(command, "internal", e.what());
        return 4;
    } catch (const std::runtime_error& e) {
        print_error(command, "domain", e.what());
        return 3;
    } catch (const std::exception& e) {
        print_error(command, "internal", e.what());
        return 4;
    }
}
