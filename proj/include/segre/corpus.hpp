#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segre/parser.hpp"

namespace segre {

struct CorpusCheck {
    std::string key;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct CorpusRun {
    std::string name;
    int order = 0;
    std::vector<CorpusCheck> checks;
    bool allPass = true;
};

/// Evaluates every `expect` line of a parsed entry.  Conventions: the first
/// declared hypersurface is the source, the second (or the first again, when
/// only one is declared) is the target; at most one map.  Supported keys:
///   source.normal/reality/finite_type/hol_nondeg/class_c/ess_finite/
///     fin_nondeg (status) and source.fin_nondeg_order (integer);
///     likewise target.*
///   source.q / target.q (series expression; checks the stored Q, which for
///     imw declarations is the computed complexification)
///   map.verify/normality/transversal/transversally_null/maps_into_target/
///     det_relation/order_match (status)
///   map.nondegeneracy (total|partial|neither)
///   map.det_fz, map.det_ftchi (series expression, identically-0 allowed)
///   map.det_relation_j0/_k0, map.f_order/ft_order,
///     map.jacobian_rank_at_0, map.jacobian_generic_rank (integers)
///   map.det_relation_c (exact scalar)
///   audit.<entry>.hypotheses/conclusion (status), audit.<entry>.branch
/// Evaluation failures (missing declarations, undefined operations) are
/// reported as failing checks, never thrown.
CorpusRun runParsedEntry(const ParsedFile& pf, const std::string& name,
                         std::uint64_t seed = 0);

/// Reads and evaluates one corpus file.
CorpusRun runCorpusFile(const std::string& path, std::optional<int> order,
                        std::uint64_t seed = 0);

/// All *.sgc files in a directory, sorted by name.
std::vector<CorpusRun> runCorpusDir(const std::string& dir,
                                    std::optional<int> order,
                                    std::uint64_t seed = 0);

}  // namespace segre
