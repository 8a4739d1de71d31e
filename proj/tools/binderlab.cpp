// binderlab: construct the symplectic/quadratic-form ETF families, enumerate
// their binders, and verify the resulting block designs, all in exact
// arithmetic.

#include "binderlab/binder.hpp"
#include "binderlab/design.hpp"
#include "binderlab/gram.hpp"
#include "binderlab/json_io.hpp"
#include "binderlab/quadratic.hpp"
#include "binderlab/report.hpp"
#include "binderlab/symplectic.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace binderlab;

namespace {

// Atomic file write: stage to <path>.tmp, then rename.
void write_file(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        write_file(out_path, content);
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

std::vector<GfVector> read_point_set(const std::string& path, int dim) {
    json j = read_json_file(path);
    std::vector<GfVector> out;
    const json& arr = j.is_object() && j.contains("points") ? j.at("points") : j;
    for (const auto& s : arr) out.push_back(GfVector::parse(2, s.get<std::string>()));
    for (const auto& v : out)
        if (v.dim() != dim) throw InvalidInput("point set has the wrong dimension");
    std::sort(out.begin(), out.end());
    return out;
}

FamilyTag parse_family(const std::string& name) {
    auto tag = family_from_name(name);
    if (!tag) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
    return *tag;
}

FrameFamily make_family(FamilyTag tag, int p, int J, const std::string& d_file) {
    if (tag == FamilyTag::Phi || tag == FamilyTag::Psi) return FrameFamily::make(tag, p, J);
    if (d_file.empty()) return FrameFamily::make(tag, p, J);
    return FrameFamily::make(tag, p, J, read_point_set(d_file, 2 * J));
}

std::string params_line(const BibdParams& pr) {
    std::ostringstream os;
    os << "(" << pr.v << "," << pr.k << "," << pr.lambda << "," << pr.r << "," << pr.b << ")";
    return os.str();
}

int cmd_lagrangians(int p, int J, bool affine, bool spread, bool as_json,
                    const std::string& out) {
    SymplecticSpace sp(p, J);
    json j;
    std::ostringstream text;
    if (spread) {
        LagrangianSpread s = lagrangian_spread(sp);
        j = spread_to_json(s);
        text << "spread of " << s.members.size() << " Lagrangian subspaces of F_" << p << "^"
             << 2 * J << "\n";
        for (const auto& m : s.members) {
            for (const auto& v : m.elements()) text << v.render() << " ";
            text << "\n";
        }
    } else if (affine) {
        auto cosets = enumerate_affine_lagrangians(sp);
        j = affine_lagrangians_to_json(cosets);
        text << cosets.size() << " affine Lagrangian subspaces\n";
        for (const auto& c : cosets) {
            for (const auto& v : c.elements()) text << v.render() << " ";
            text << "\n";
        }
    } else {
        auto lags = enumerate_lagrangians(sp);
        j = lagrangians_to_json(lags);
        text << lags.size() << " Lagrangian subspaces\n";
        for (const auto& lag : lags) {
            for (const auto& v : lag.elements()) text << v.render() << " ";
            text << "\n";
        }
    }
    emit(out, as_json || !out.empty() ? j.dump(2) : text.str());
    return 0;
}

int cmd_gram(FamilyTag tag, int p, int J, const std::string& d_file, const std::string& out) {
    ExactGram g = gram_build(make_family(tag, p, J, d_file));
    emit(out, gram_to_json(g).dump(2));
    std::cerr << "gram " << family_name(tag) << ": n=" << g.n << " diag=" << g.diag
              << " tight=" << (g.analysis->tight ? "yes" : "no") << " rank=" << g.analysis->rank
              << "\n";
    return g.analysis->tight ? 0 : 1;
}

int cmd_binder(FamilyTag tag, int p, int J, const std::string& d_file, const std::string& out,
               bool force_search, bool verify, int threads, bool as_json) {
    FrameFamily fam = make_family(tag, p, J, d_file);
    BinderResult res;
    if (tag == FamilyTag::Phi) {
        res = binder_symplectic(p, J);
    } else if (tag == FamilyTag::Psi) {
        res = binder_dual_symplectic(p, J);
    } else {
        res = binder_family(tag, J, fam.d, threads);
    }
    std::cerr << "binder " << family_name(tag) << ": " << res.blocks.size() << " blocks in "
              << res.elapsed_seconds << "s\n";
    bool ok = true;
    if (force_search || verify) {
        if (p != 2 && (tag != FamilyTag::Phi && tag != FamilyTag::Psi))
            throw InvalidInput("sub-families require p = 2");
    }
    if (force_search) {
        ExactGram g = gram_build(fam);
        BinderResult generic = binder_generic(g, threads);
        bool match = generic.blocks == res.blocks;
        std::cerr << "force-search: generic found " << generic.blocks.size() << " blocks, "
                  << (match ? "matching" : "MISMATCH") << "\n";
        ok = ok && match;
    }
    if (verify) {
        ExactGram g = gram_build(fam);
        verify_blocks(res, g);
        if (!res.blocks.empty()) {
            BibdCheck chk = verify_bibd(res.incidence());
            std::cerr << "verify: blocks simplex-checked; BIBD "
                      << (chk.ok ? params_line(chk.params) : "NO") << "\n";
            ok = ok && chk.ok;
        } else {
            std::cerr << "verify: empty binder\n";
        }
    }
    if (as_json || !out.empty()) {
        emit(out, blocks_to_json(res).dump(2));
    } else {
        std::ostringstream text;
        for (const auto& blk : res.blocks) {
            for (int m : blk) text << res.labels[size_t(m)] << " ";
            text << "\n";
        }
        emit(out, text.str());
    }
    return ok ? 0 : 1;
}

int cmd_design_verify(const std::string& in) {
    IncidenceStructure inc = incidence_from_json(read_json_file(in));
    BibdCheck chk = verify_bibd(inc);
    if (chk.ok) {
        std::cout << "BIBD " << params_line(chk.params) << "\n";
        return 0;
    }
    std::cout << "not a BIBD; violating pair (" << chk.violating_pair.first << ","
              << chk.violating_pair.second << ")\n";
    return 1;
}

int cmd_design_ovals(const std::string& in, const std::string& set_csv) {
    IncidenceStructure inc = incidence_from_json(read_json_file(in));
    std::vector<int> set;
    std::stringstream ss(set_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto it = std::find(inc.labels.begin(), inc.labels.end(), item);
        if (it == inc.labels.end()) throw InvalidInput("unknown vertex '" + item + "'");
        set.push_back(int(it - inc.labels.begin()));
    }
    OvalCheck oc = is_oval(set, inc);
    Rat bound = oval_bound(verify_bibd(inc).params);
    std::cout << "arc: " << (oc.is_arc ? "yes" : "no") << ", oval: "
              << (oc.is_oval ? "yes" : "no") << ", bound: " << bound.to_string() << "\n";
    return oc.is_oval ? 0 : 1;
}

int cmd_design_decompose(int J, const std::string& d_file, const std::string& csv_prefix) {
    BinderResult psi = binder_dual_symplectic(2, J);
    std::vector<GfVector> d =
        d_file.empty() ? default_affine_quadric(J) : read_point_set(d_file, 2 * J);
    std::vector<int> d_ids;
    for (const auto& v : d) d_ids.push_back(int(v.lex_rank()));
    DecompositionReport rep = decompose_incidence(psi.incidence(), d_ids);
    std::cout << "X    " << params_line(rep.full) << "\n";
    std::cout << "X_D  " << params_line(rep.inside_d) << "\n";
    std::cout << "X_Dc " << params_line(rep.d_complement) << "\n";
    std::cout << "X_0  " << params_line(rep.d_part) << "\n";
    std::cout << "half split: " << (rep.half_split_ok ? "ok" : "VIOLATED")
              << ", threefold multiplicity: " << (rep.multiplicity_three_ok ? "ok" : "VIOLATED")
              << "\n";
    std::cout << "literal block identity: " << (rep.literal_identity_ok ? "ok" : "VIOLATED")
              << ", closed forms: " << (rep.closed_forms_ok ? "ok" : "VIOLATED") << "\n";
    if (!csv_prefix.empty()) {
        write_file(csv_prefix + "_x.csv", incidence_matrix_csv(rep.x));
        write_file(csv_prefix + "_xd.csv", incidence_matrix_csv(rep.x_d));
        write_file(csv_prefix + "_xdc.csv", incidence_matrix_csv(rep.x_dc));
        write_file(csv_prefix + "_x0.csv", incidence_matrix_csv(rep.x_0));
    }
    return rep.literal_identity_ok && rep.closed_forms_ok ? 0 : 1;
}

int cmd_design_resolve(const std::string& in, int classes) {
    IncidenceStructure inc = incidence_from_json(read_json_file(in));
    ResolutionResult res = find_resolution(inc, classes);
    if (res.found) {
        std::cout << "resolution into " << classes << " classes:\n";
        for (const auto& cls : res.classes) {
            for (int b : cls) {
                std::cout << " {";
                for (size_t i = 0; i < inc.blocks[size_t(b)].size(); ++i) {
                    if (i) std::cout << ",";
                    int m = inc.blocks[size_t(b)][i];
                    std::cout << (inc.labels.empty() ? std::to_string(m) : inc.labels[size_t(m)]);
                }
                std::cout << "}";
            }
            std::cout << "\n";
        }
        return 0;
    }
    std::cout << "no resolution exists (exhaustive search completed)\n";
    return 1;
}

int cmd_report(int J, bool as_json, bool as_csv, const std::string& out, int threads) {
    auto rows = report_tables(J, threads);
    if (as_json) {
        emit(out, report_to_json(J, rows).dump(2));
        return 0;
    }
    std::ostringstream text;
    if (as_csv) {
        text << "family,D,V,K,Lambda,R,B\n";
        for (const auto& r : rows)
            text << family_name(r.tag) << "," << r.d << "," << r.v << "," << r.k << ","
                 << r.lambda << "," << r.r << "," << r.b << "\n";
    } else {
        text << "J = " << J << "\n";
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-11s %5s %5s %5s %7s %6s %7s\n", "family", "D", "V", "K",
                      "Lambda", "R", "B");
        text << buf;
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%-11s %5lld %5lld %5lld %7lld %6lld %7lld\n",
                          family_name(r.tag), r.d, r.v, r.k, r.lambda, r.r, r.b);
            text << buf;
        }
    }
    emit(out, text.str());
    return 0;
}

int cmd_golden(const std::string& fixture) {
    auto run = [](const std::string& name) {
        GoldenCheck chk = golden_check(name);
        std::cout << (chk.pass ? "pass" : "FAIL") << " " << name << ": " << chk.got_count << "/"
                  << chk.expected_count << " sets equal\n";
        for (const auto& m : chk.mismatches) std::cout << "  " << m << "\n";
        return chk.pass;
    };
    bool ok = true;
    if (fixture == "all") {
        for (const auto& name : golden_fixture_names()) ok = run(name) && ok;
    } else {
        ok = run(fixture);
    }
    return ok ? 0 : 1;
}

int cmd_probability(FamilyTag tag, int J) {
    Rat pr = block_probability(tag, J);
    std::cout << pr.to_string() << "\n";
    return 0;
}

int cmd_spark(FamilyTag tag, int p, int J, const std::string& d_file, int cap) {
    ExactGram g = gram_build(make_family(tag, p, J, d_file));
    SparkResult res = spark_exhaustive(g, cap);
    if (!res.found) {
        std::cout << "no singular principal submatrix up to size " << cap << "\n";
        return 0;
    }
    std::cout << "spark " << res.spark << " with " << res.singular_subsets.size()
              << " singular subsets\n";
    for (const auto& sub : res.singular_subsets) {
        for (int m : sub) std::cout << g.labels[size_t(m)] << " ";
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact binder enumeration for symplectic and quadratic-form ETFs"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "cap on worker threads inside searches");

    // lagrangians
    auto* lag = app.add_subcommand("lagrangians", "enumerate (affine) Lagrangian subspaces");
    int lag_p = 2, lag_j = 2;
    bool lag_affine = false, lag_spread = false, lag_json = false;
    std::string lag_out;
    lag->add_option("--p", lag_p, "prime modulus")->capture_default_str();
    lag->add_option("--j", lag_j, "half-dimension J")->required();
    lag->add_flag("--affine", lag_affine, "enumerate cosets instead of subspaces");
    lag->add_flag("--spread", lag_spread, "emit a Lagrangian spread (affine plane)");
    lag->add_flag("--json", lag_json, "JSON output");
    lag->add_option("--out", lag_out, "write JSON to file");

    // gram
    auto* gram = app.add_subcommand("gram", "build a family Gram matrix");
    std::string gram_family, gram_d, gram_out;
    int gram_p = 2, gram_j = 2;
    gram->add_option("--family", gram_family, "phi|psi|phi-dc|phi-dc-hat|psi-d|psi-d-hat")
        ->required();
    gram->add_option("--p", gram_p, "prime modulus")->capture_default_str();
    gram->add_option("--j", gram_j, "half-dimension J")->required();
    gram->add_option("--d", gram_d, "JSON file with the affine quadric D");
    gram->add_option("--out", gram_out, "output file");

    // binder
    auto* bind = app.add_subcommand("binder", "enumerate a binder");
    std::string bind_family, bind_d, bind_out;
    int bind_p = 2, bind_j = 2;
    bool bind_force = false, bind_verify = false, bind_json = false;
    bind->add_option("--family", bind_family, "family tag")->required();
    bind->add_option("--p", bind_p, "prime modulus")->capture_default_str();
    bind->add_option("--j", bind_j, "half-dimension J")->required();
    bind->add_option("--d", bind_d, "JSON file with the affine quadric D");
    bind->add_option("--out", bind_out, "output file");
    bind->add_flag("--force-search", bind_force,
                   "also run the generic search as an independent confirmation");
    bind->add_flag("--verify", bind_verify, "re-check blocks and the block design");
    bind->add_flag("--json", bind_json, "JSON output");

    // design
    auto* design = app.add_subcommand("design", "incidence-structure verification");
    design->require_subcommand(1);
    auto* dv = design->add_subcommand("verify", "BIBD check");
    std::string dv_in;
    dv->add_option("--in", dv_in, "incidence JSON")->required();
    auto* dov = design->add_subcommand("ovals", "oval check for a vertex set");
    std::string dov_in, dov_set;
    dov->add_option("--in", dov_in, "incidence JSON")->required();
    dov->add_option("--set", dov_set, "comma-separated vertex labels")->required();
    auto* dd = design->add_subcommand("decompose", "four-block incidence decomposition");
    int dd_j = 2;
    std::string dd_d, dd_csv;
    dd->add_option("--j", dd_j, "half-dimension J")->required();
    dd->add_option("--d", dd_d, "JSON file with the affine quadric D");
    dd->add_option("--csv", dd_csv, "prefix for CSV exports of X, X_D, X_Dc, X_0");
    auto* dr = design->add_subcommand("resolve", "resolution search");
    std::string dr_in;
    int dr_classes = 0;
    dr->add_option("--in", dr_in, "incidence JSON")->required();
    dr->add_option("--classes", dr_classes, "number of classes")->required();

    // report
    auto* rep = app.add_subcommand("report", "six-family summary table");
    int rep_j = 2;
    bool rep_json = false, rep_csv = false;
    std::string rep_out;
    rep->add_option("--j", rep_j, "half-dimension J (2..4)")->required();
    rep->add_flag("--json", rep_json, "JSON output");
    rep->add_flag("--csv", rep_csv, "CSV output");
    rep->add_option("--out", rep_out, "output file");

    // golden
    auto* gold = app.add_subcommand("golden", "recompute and diff a golden fixture");
    std::string gold_fixture;
    gold->add_option("fixture", gold_fixture,
                     "lagrangians-j2|tremain-j3-lambda|tremain-j4-lambda|all")
        ->required();

    // probability
    auto* prob = app.add_subcommand("probability", "exact B / C(N, S+1)");
    std::string prob_family;
    int prob_j = 2;
    prob->add_option("--family", prob_family, "family tag")->required();
    prob->add_option("--j", prob_j, "half-dimension J")->required();

    // spark
    auto* spk = app.add_subcommand("spark", "exhaustive spark oracle");
    std::string spk_family, spk_d;
    int spk_p = 2, spk_j = 2, spk_cap = 0;
    spk->add_option("--family", spk_family, "family tag")->required();
    spk->add_option("--p", spk_p, "prime modulus")->capture_default_str();
    spk->add_option("--j", spk_j, "half-dimension J")->required();
    spk->add_option("--d", spk_d, "JSON file with the affine quadric D");
    spk->add_option("--cap", spk_cap, "largest subset size to test");

    CLI11_PARSE(app, argc, argv);

    try {
        if (lag->parsed()) return cmd_lagrangians(lag_p, lag_j, lag_affine, lag_spread, lag_json, lag_out);
        if (gram->parsed())
            return cmd_gram(parse_family(gram_family), gram_p, gram_j, gram_d, gram_out);
        if (bind->parsed())
            return cmd_binder(parse_family(bind_family), bind_p, bind_j, bind_d, bind_out,
                              bind_force, bind_verify, threads, bind_json);
        if (design->parsed()) {
            if (dv->parsed()) return cmd_design_verify(dv_in);
            if (dov->parsed()) return cmd_design_ovals(dov_in, dov_set);
            if (dd->parsed()) return cmd_design_decompose(dd_j, dd_d, dd_csv);
            if (dr->parsed()) return cmd_design_resolve(dr_in, dr_classes);
        }
        if (rep->parsed()) return cmd_report(rep_j, rep_json, rep_csv, rep_out, threads);
        if (gold->parsed()) return cmd_golden(gold_fixture);
        if (prob->parsed()) return cmd_probability(parse_family(prob_family), prob_j);
        if (spk->parsed())
            return cmd_spark(parse_family(spk_family), spk_p, spk_j, spk_d,
                             spk_cap ? spk_cap : 20);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
