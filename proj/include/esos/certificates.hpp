#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "esos/cut_density.hpp"
#include "esos/embed.hpp"
#include "esos/matchings.hpp"
#include "esos/oracles.hpp"
#include "esos/regularity.hpp"
#include "esos/stability.hpp"
#include "esos/tree_ops.hpp"

namespace esos {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "esos";
inline constexpr const char* kToolVersion = "0.1.0";

/// Canonical certificate text: sorted keys, two-space indent, trailing
/// newline. Byte-identical for equal values, which is what the determinism
/// checks compare.
std::string dump_json(const Json& j);

/// {"op": name, "inputs": digests, "result": payload} plus an optional
/// "witness" carrying enough data to re-verify without re-running.
Json make_certificate(const std::string& op, const Json& inputs, const Json& result);
Json make_certificate(const std::string& op, const Json& inputs, const Json& result,
                      const Json& witness);

Json graph_input(const Graph& g);
Json tree_input(const Tree& t);

Json cut_json(const CutWitness& w);
Json kappa_json(const KappaResult& r);
Json decomposition_json(const Decomposition& d);
Json dominated_json(const DominatedDecomposition& d);
Json regularity_json(const RegularityResult& r);
Json reduced_cover_json(const ReducedCover& rc);
Json konig_json(const KonigCover& k);
Json half_matching_json(const HalfMatching& m);
Json half_pairs_json(const std::vector<HalfPair>& ps);
Json stars_json(const StarsOrMatching& s);
Json division_json(const TreeDivision& d);
Json split_json(const TreeSplit& s);
Json leaves_json(const LeavesOrPaths& lp);
Json embedding_json(const Embedding& f);
Json trace_json(const EmbedTrace& t);
Json dense_core_json(const DenseCore& c);
Json bipartite_core_json(const BipartiteCore& c);
Json contain_json(const ContainResult& r);
Json sample_stats_json(const SampleStats& s);

/// Everything needed to reproduce a CLI run; stored next to the certificate.
struct RunManifest {
    std::string subcommand;
    Json inputs = Json::object();
    ParamProfile profile;
    uint64_t seed = 0;
    std::vector<std::string> outputs;

    Json to_json() const;
};

}  // namespace esos
