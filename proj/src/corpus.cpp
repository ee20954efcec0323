#include "segre/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "segre/invariants.hpp"

namespace segre {

namespace {

std::string statusWord(const Verdict& v) { return statusName(v.status); }

// Lazily computes the per-entry results an expectation can reference.
class EntryEvaluator {
public:
    EntryEvaluator(const ParsedFile& pf, std::uint64_t seed)
        : pf_(pf), seed_(seed) {}

    CorpusCheck check(const Expectation& ex) {
        CorpusCheck c{ex.key, ex.value, "", false};
        try {
            evaluate(ex, c);
        } catch (const std::exception& e) {
            c.actual = std::string("error: ") + e.what();
            c.pass = false;
        }
        return c;
    }

private:
    const NormalHypersurface& side(bool target) {
        if (pf_.hypersurfaces.empty())
            throw std::runtime_error("no hypersurface declared");
        size_t idx = target && pf_.hypersurfaces.size() > 1 ? 1 : 0;
        return pf_.hypersurfaces[idx].m;
    }
    const SegreMap& theMap() {
        if (pf_.maps.empty()) throw std::runtime_error("no map declared");
        return pf_.maps[0].h;
    }
    const ClassificationReport& classification(bool target) {
        auto& slot = target ? targetClass_ : sourceClass_;
        if (!slot) slot = classify(side(target), seed_);
        return *slot;
    }
    const NondegResult& nondeg() {
        if (!nondeg_) nondeg_ = segreNondegeneracy(theMap());
        return *nondeg_;
    }
    const AuditReport& auditReport() {
        if (!audit_)
            audit_ = audit(side(false), side(true), theMap(), seed_);
        return *audit_;
    }

    void statusCheck(CorpusCheck& c, const Verdict& v) {
        c.actual = statusWord(v);
        if (!v.witness.empty()) c.actual += " [" + v.witness + "]";
        c.pass = statusWord(v) == c.expected;
    }
    void intCheck(CorpusCheck& c, long long value) {
        c.actual = std::to_string(value);
        c.pass = c.actual == c.expected;
    }
    void seriesCheck(CorpusCheck& c, const Series& actual) {
        c.actual = actual.str();
        Series expected =
            parseExpression(c.expected, actual.space(), actual.order());
        c.pass = expected == actual;
    }
    void scalarCheck(CorpusCheck& c, const GaussianRational& actual) {
        c.actual = actual.str();
        c.pass = GaussianRational::parse(c.expected) == actual;
    }

    void evaluate(const Expectation& ex, CorpusCheck& c) {
        const std::string& key = ex.key;
        auto hasPrefix = [&](const std::string& p) {
            return key.rfind(p, 0) == 0;
        };
        if (hasPrefix("source.") || hasPrefix("target.")) {
            bool target = hasPrefix("target.");
            std::string tail = key.substr(7);
            const NormalHypersurface& m = side(target);
            if (tail == "normal") return statusCheck(c, m.validateNormal());
            if (tail == "reality") return statusCheck(c, m.validateReality());
            if (tail == "q") return seriesCheck(c, m.q());
            const ClassificationReport& cl = classification(target);
            if (tail == "finite_type") return statusCheck(c, cl.finiteType);
            if (tail == "hol_nondeg") return statusCheck(c, cl.holNondeg);
            if (tail == "class_c") return statusCheck(c, cl.classC);
            if (tail == "ess_finite") return statusCheck(c, cl.essFinite);
            if (tail == "fin_nondeg") return statusCheck(c, cl.finNondeg);
            if (tail == "fin_nondeg_order") {
                if (!cl.finNondeg.isProved())
                    throw std::runtime_error("finite nondegeneracy not proved");
                return intCheck(c, cl.finNondeg.order);
            }
            throw std::runtime_error("unknown expectation key '" + key + "'");
        }
        if (hasPrefix("map.")) {
            std::string tail = key.substr(4);
            const SegreMap& h = theMap();
            if (tail == "verify")
                return statusCheck(c, verifyHspm(side(false), side(true), h));
            if (tail == "normality")
                return statusCheck(c, normalityConsequences(h));
            if (tail == "transversal")
                return statusCheck(c, isSegreTransversal(h));
            if (tail == "transversally_null")
                return statusCheck(c, isTransversallyNull(h));
            if (tail == "maps_into_target")
                return statusCheck(c, mapsIntoTarget(side(true), h));
            if (tail == "nondegeneracy") {
                c.actual = nondegKindName(nondeg().kind);
                c.pass = c.actual == c.expected;
                return;
            }
            if (tail == "det_fz") return seriesCheck(c, nondeg().detFz);
            if (tail == "det_ftchi") return seriesCheck(c, nondeg().detFtChi);
            if (tail == "det_relation")
                return statusCheck(c, detConjugateRelation(h).verdict);
            if (tail == "det_relation_j0")
                return intCheck(c, detConjugateRelation(h).j0);
            if (tail == "det_relation_k0")
                return intCheck(c, detConjugateRelation(h).k0);
            if (tail == "det_relation_c")
                return scalarCheck(c, detConjugateRelation(h).c);
            if (tail == "order_match")
                return statusCheck(c, orderMatch(h).verdict);
            if (tail == "f_order" || tail == "ft_order") {
                OrderMatchResult om = orderMatch(h);
                auto v = tail == "f_order" ? om.fOrder : om.ftOrder;
                if (!v) throw std::runtime_error("order exceeds truncation");
                return intCheck(c, *v);
            }
            if (tail == "jacobian_rank_at_0")
                return intCheck(c, jacobianRankAt0(h));
            if (tail == "jacobian_generic_rank")
                return intCheck(c, jacobianGenericRank(h, seed_).rank);
            throw std::runtime_error("unknown expectation key '" + key + "'");
        }
        if (hasPrefix("audit.")) {
            std::string rest = key.substr(6);
            size_t dot = rest.rfind('.');
            if (dot == std::string::npos)
                throw std::runtime_error("audit keys end in .hypotheses, "
                                         ".conclusion or .branch");
            std::string entryName = rest.substr(0, dot);
            std::string field = rest.substr(dot + 1);
            for (const AuditEntry& e : auditReport().entries) {
                if (e.name != entryName) continue;
                if (field == "hypotheses") return statusCheck(c, e.hypotheses);
                if (field == "conclusion") return statusCheck(c, e.conclusion);
                if (field == "branch") {
                    c.actual = e.branch;
                    c.pass = c.actual == c.expected;
                    return;
                }
                throw std::runtime_error("unknown audit field '" + field + "'");
            }
            throw std::runtime_error("no audit entry named '" + entryName + "'");
        }
        throw std::runtime_error("unknown expectation key '" + key + "'");
    }

    const ParsedFile& pf_;
    std::uint64_t seed_;
    std::optional<ClassificationReport> sourceClass_, targetClass_;
    std::optional<NondegResult> nondeg_;
    std::optional<AuditReport> audit_;
};

}  // namespace

CorpusRun runParsedEntry(const ParsedFile& pf, const std::string& name,
                         std::uint64_t seed) {
    CorpusRun run;
    run.name = name;
    run.order = pf.order;
    EntryEvaluator ev(pf, seed);
    for (const Expectation& ex : pf.expectations) {
        run.checks.push_back(ev.check(ex));
        run.allPass = run.allPass && run.checks.back().pass;
    }
    return run;
}

CorpusRun runCorpusFile(const std::string& path, std::optional<int> order,
                        std::uint64_t seed) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    ParsedFile pf = parseFile(buf.str(), order);
    return runParsedEntry(pf, std::filesystem::path(path).stem().string(),
                          seed);
}

std::vector<CorpusRun> runCorpusDir(const std::string& dir,
                                    std::optional<int> order,
                                    std::uint64_t seed) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".sgc")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::runtime_error("no .sgc files in " + dir);
    std::vector<CorpusRun> runs;
    for (const std::string& f : files)
        runs.push_back(runCorpusFile(f, order, seed));
    return runs;
}

}  // namespace segre
