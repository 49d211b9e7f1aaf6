#include "esos/certificates.hpp"

#include "esos/graph_io.hpp"

namespace esos {

namespace {

Json edge_array(const std::vector<Edge>& edges) {
    Json a = Json::array();
    for (auto [u, v] : edges) a.push_back(Json::array({u, v}));
    return a;
}

Json int_sets(const std::vector<std::vector<int>>& sets) {
    Json a = Json::array();
    for (const auto& s : sets) a.push_back(s);
    return a;
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json make_certificate(const std::string& op, const Json& inputs, const Json& result) {
    Json c;
    c["op"] = op;
    c["inputs"] = inputs;
    c["result"] = result;
    return c;
}

Json make_certificate(const std::string& op, const Json& inputs, const Json& result,
                      const Json& witness) {
    Json c = make_certificate(op, inputs, result);
    c["witness"] = witness;
    return c;
}

Json graph_input(const Graph& g) {
    Json j;
    j["digest"] = content_digest(serialize_graph(g));
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    return j;
}

Json tree_input(const Tree& t) {
    Json j;
    j["digest"] = content_digest(serialize_tree(t));
    j["order"] = t.order();
    j["edges"] = t.edge_count();
    return j;
}

Json cut_json(const CutWitness& w) {
    Json j;
    j["side_a"] = w.side_a;
    j["side_b"] = w.side_b;
    j["ratio"] = w.ratio.str();
    return j;
}

Json kappa_json(const KappaResult& r) {
    Json j;
    j["kappa"] = r.kappa.str();
    j["exact"] = r.exact;
    j["witness"] = cut_json(r.witness);
    return j;
}

Json decomposition_json(const Decomposition& d) {
    Json j;
    j["components"] = int_sets(d.components);
    j["deleted_edges"] = edge_array(d.deleted_edges);
    j["exact"] = d.exact;
    return j;
}

Json dominated_json(const DominatedDecomposition& d) {
    Json j;
    j["components"] = int_sets(d.components);
    j["cores"] = int_sets(d.cores);
    Json ks = Json::array();
    for (const auto& k : d.core_kappa) ks.push_back(k.str());
    j["core_kappa"] = ks;
    j["deleted_edges"] = edge_array(d.deleted_edges);
    j["exact"] = d.exact;
    return j;
}

Json regularity_json(const RegularityResult& r) {
    Json j;
    j["parts"] = int_sets(r.partition.parts);
    j["exceptional"] = r.partition.exceptional;
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        Json pj;
        pj["i"] = p.i;
        pj["j"] = p.j;
        pj["regular"] = p.regular;
        pj["density"] = p.density.str();
        pj["mode"] = p.mode == PairCheckMode::Exact      ? "exact"
                     : p.mode == PairCheckMode::Restricted ? "restricted"
                                                           : "sampled";
        pairs.push_back(pj);
    }
    j["pairs"] = pairs;
    j["energy"] = r.energy.str();
    j["iterations"] = r.iterations;
    j["resolved"] = r.resolved;
    return j;
}

Json reduced_cover_json(const ReducedCover& rc) {
    Json j;
    j["parts_x"] = int_sets(rc.parts_x);
    j["parts_y"] = int_sets(rc.parts_y);
    j["cover"] = rc.cover;
    j["residual_edges"] = rc.residual_edges;
    j["all_regular"] = rc.all_regular;
    return j;
}

Json konig_json(const KonigCover& k) {
    Json j;
    j["matching"] = edge_array(k.matching);
    j["cover"] = k.cover;
    return j;
}

Json half_matching_json(const HalfMatching& m) {
    Json j;
    Json w = Json::array();
    for (const auto& [e, r] : m.weights)
        w.push_back(Json::array({e.first, e.second, r.str()}));
    j["weights"] = w;
    Json cov = Json::array();
    for (const auto& r : m.cover) cov.push_back(r.str());
    j["cover"] = cov;
    j["value"] = m.value.str();
    return j;
}

Json half_pairs_json(const std::vector<HalfPair>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(Json::array({p.u, p.u_half, p.v, p.v_half}));
    return a;
}

Json stars_json(const StarsOrMatching& s) {
    Json j;
    j["is_stars"] = s.is_stars;
    Json stars = Json::array();
    for (const auto& st : s.stars) {
        Json sj;
        sj["center"] = st.center;
        sj["leaves"] = st.leaves;
        stars.push_back(sj);
    }
    j["stars"] = stars;
    j["matching"] = edge_array(s.matching);
    return j;
}

Json division_json(const TreeDivision& d) {
    Json j;
    j["pivot"] = d.pivot;
    j["side"] = d.side;
    return j;
}

Json split_json(const TreeSplit& s) {
    Json j;
    j["edge"] = Json::array({s.edge.first, s.edge.second});
    j["side"] = s.side;
    return j;
}

Json leaves_json(const LeavesOrPaths& lp) {
    Json j;
    j["is_leaves"] = lp.is_leaves;
    j["leaf_edges"] = edge_array(lp.leaf_edges);
    j["paths"] = int_sets(lp.paths);
    return j;
}

Json embedding_json(const Embedding& f) {
    Json a = Json::array();
    for (int v = 0; v < f.tree_order(); ++v) a.push_back(f.assigned(v) ? f[v] : -1);
    return a;
}

Json trace_json(const EmbedTrace& t) {
    Json j;
    j["case"] = t.case_label;
    Json stages = Json::array();
    for (const auto& st : t.stages) {
        Json sj;
        sj["label"] = st.label;
        sj["tree_vertices"] = st.tree_vertices;
        sj["targets"] = st.targets;
        sj["min_feasible"] = st.min_feasible;
        stages.push_back(sj);
    }
    j["stages"] = stages;
    j["embedding"] = embedding_json(t.f);
    j["ok"] = t.ok;
    j["failure"] = t.failure;
    return j;
}

Json dense_core_json(const DenseCore& c) {
    Json j;
    j["found"] = c.found;
    j["vertices"] = c.vertices;
    j["min_degree"] = c.min_degree;
    return j;
}

Json bipartite_core_json(const BipartiteCore& c) {
    Json j;
    j["found"] = c.found;
    j["side_x"] = c.side_x;
    j["side_y"] = c.side_y;
    j["min_deg_x"] = c.min_deg_x;
    j["min_deg_y"] = c.min_deg_y;
    return j;
}

Json contain_json(const ContainResult& r) {
    Json j;
    j["verdict"] = r.verdict == Verdict::Yes  ? "yes"
                   : r.verdict == Verdict::No ? "no"
                                              : "indeterminate";
    j["nodes_explored"] = r.nodes_explored;
    if (r.witness) j["witness"] = embedding_json(*r.witness);
    return j;
}

Json sample_stats_json(const SampleStats& s) {
    Json j;
    j["trials"] = s.trials;
    j["contained"] = s.contained;
    j["violations"] = s.violations;
    j["indeterminate"] = s.indeterminate;
    j["violation_trials"] = s.violation_trials;
    return j;
}

Json RunManifest::to_json() const {
    Json j;
    j["subcommand"] = subcommand;
    j["inputs"] = inputs;
    j["profile"] = Json::parse(profile.to_json());
    j["seed"] = seed;
    j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    j["outputs"] = outputs;
    return j;
}

}  // namespace esos
