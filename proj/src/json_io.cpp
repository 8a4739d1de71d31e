#include "binderlab/json_io.hpp"

#include <algorithm>
#include <map>

namespace binderlab {

json lagrangians_to_json(const std::vector<Subspace>& lagrangians) {
    json arr = json::array();
    for (const auto& lag : lagrangians) {
        json set = json::array();
        for (const auto& v : lag.elements()) set.push_back(v.render());
        arr.push_back(set);
    }
    return arr;
}

json affine_lagrangians_to_json(const std::vector<AffineSubspace>& cosets) {
    json arr = json::array();
    for (const auto& coset : cosets) {
        json set = json::array();
        for (const auto& v : coset.elements()) set.push_back(v.render());
        arr.push_back(set);
    }
    return arr;
}

json spread_to_json(const LagrangianSpread& spread) {
    json j;
    j["subspaces"] = lagrangians_to_json(spread.members);
    json rows = json::array();
    for (int r = 0; r < spread.transition.rows(); ++r)
        rows.push_back(spread.transition.row(r).render());
    j["transition"] = rows;
    return j;
}

json quadratic_form_to_json(const QuadraticForm& q) {
    json j;
    j["j"] = q.J();
    j["base"] = q.base_sign() > 0 ? "+" : "-";
    j["shift"] = q.shift().render();
    return j;
}

QuadraticForm quadratic_form_from_json(const json& j) {
    int big_j = j.at("j").get<int>();
    std::string base = j.at("base").get<std::string>();
    if (base != "+" && base != "-") throw InvalidInput("quadratic form: base must be '+' or '-'");
    return QuadraticForm(big_j, base == "+" ? 1 : -1,
                         GfVector::parse(2, j.at("shift").get<std::string>()));
}

json quadric_to_json(const Quadric& quad) {
    json arr = json::array();
    for (const auto& v : quad.points) arr.push_back(v.render());
    return arr;
}

json gram_to_json(const ExactGram& g) {
    json j;
    j["n"] = g.n;
    j["p"] = g.p;
    j["diag"] = g.diag;
    j["labels"] = g.labels;
    json off = json::array();
    for (int i = 0; i < g.n; ++i)
        for (int k = i + 1; k < g.n; ++k) {
            SignedRoot e = g.entry(i, k);
            if (e.is_zero()) continue;
            off.push_back(json::array({i, k, int(e.eps), int(e.k)}));
        }
    j["offdiag"] = off;
    return j;
}

ExactGram gram_from_json(const json& j) {
    ExactGram g;
    g.n = j.at("n").get<int>();
    g.p = j.at("p").get<int>();
    g.diag = j.at("diag").get<long long>();
    if (j.contains("labels")) {
        g.labels = j.at("labels").get<std::vector<std::string>>();
    } else {
        for (int i = 0; i < g.n; ++i) g.labels.push_back(std::to_string(i));
    }
    if ((int)g.labels.size() != g.n) throw InvalidInput("gram_from_json: label count mismatch");
    g.off.assign(size_t(g.n) * g.n, SignedRoot::zero());
    for (const auto& ent : j.at("offdiag")) {
        int a = ent.at(0).get<int>(), b = ent.at(1).get<int>();
        SignedRoot e = SignedRoot::make(g.p, ent.at(2).get<int>(), ent.at(3).get<int>());
        g.set_entry(a, b, e);
        g.set_entry(b, a, e.conj(g.p));
    }
    g.finalize();
    return g;
}

json blocks_to_json(const BinderResult& result) {
    json arr = json::array();
    for (const auto& blk : result.blocks) {
        json set = json::array();
        for (int m : blk) set.push_back(result.labels[size_t(m)]);
        arr.push_back(set);
    }
    return arr;
}

json incidence_to_json(const IncidenceStructure& inc) {
    json j;
    json verts = json::array();
    for (int i = 0; i < inc.v; ++i)
        verts.push_back(inc.labels.empty() ? std::to_string(i) : inc.labels[size_t(i)]);
    j["vertices"] = verts;
    json blocks = json::array();
    for (const auto& blk : inc.blocks) {
        json set = json::array();
        for (int m : blk)
            set.push_back(inc.labels.empty() ? std::to_string(m) : inc.labels[size_t(m)]);
        blocks.push_back(set);
    }
    j["blocks"] = blocks;
    return j;
}

IncidenceStructure incidence_from_json(const json& j) {
    IncidenceStructure inc;
    std::map<std::string, int> index;
    if (j.is_object() && j.contains("vertices")) {
        for (const auto& v : j.at("vertices")) {
            std::string s = v.get<std::string>();
            index[s] = int(inc.labels.size());
            inc.labels.push_back(s);
        }
    } else {
        // Bare array of blocks: vertices inferred as the sorted union.
        const json& blocks = j.is_object() ? j.at("blocks") : j;
        std::vector<std::string> all;
        for (const auto& blk : blocks)
            for (const auto& v : blk) all.push_back(v.get<std::string>());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (const auto& s : all) {
            index[s] = int(inc.labels.size());
            inc.labels.push_back(s);
        }
    }
    inc.v = int(inc.labels.size());
    const json& blocks = j.is_object() ? j.at("blocks") : j;
    for (const auto& blk : blocks) {
        std::vector<int> members;
        for (const auto& v : blk) {
            auto it = index.find(v.get<std::string>());
            if (it == index.end()) throw InvalidInput("incidence_from_json: unknown vertex");
            members.push_back(it->second);
        }
        std::sort(members.begin(), members.end());
        inc.blocks.push_back(std::move(members));
    }
    inc.sort_blocks();
    return inc;
}

json report_to_json(int J, const std::vector<ReportRow>& rows) {
    json j;
    j["j"] = J;
    json arr = json::array();
    for (const auto& row : rows) {
        json r;
        r["family"] = family_name(row.tag);
        r["d"] = row.d;
        r["v"] = row.v;
        r["k"] = row.k;
        r["lambda"] = row.lambda;
        r["r"] = row.r;
        r["b"] = row.b;
        arr.push_back(r);
    }
    j["rows"] = arr;
    return j;
}

std::string incidence_matrix_csv(const std::vector<BitRow>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += char('0' + row[c]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace binderlab
