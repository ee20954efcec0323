#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "segre/corpus.hpp"
#include "segre/parser.hpp"
#include "segre/report.hpp"

#ifndef SEGRE_DEFAULT_CORPUS_DIR
#define SEGRE_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace {

using segre::Json;

struct Options {
    std::optional<int> order;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string corpusDir = SEGRE_DEFAULT_CORPUS_DIR;
};

class FileCache {
public:
    explicit FileCache(const Options& opt) : opt_(opt) {}

    const segre::ParsedFile& load(const std::string& base) {
        auto it = cache_.find(base);
        if (it != cache_.end()) return it->second;
        std::string path = base;
        if (!std::filesystem::exists(path))
            path = opt_.corpusDir + "/" + base + ".sgc";
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open '" + base + "' (tried " +
                                     path + ")");
        std::ostringstream buf;
        buf << in.rdbuf();
        return cache_.emplace(base, segre::parseFile(buf.str(), opt_.order))
            .first->second;
    }

    // Reference form: "file" or "file:declaration".
    std::pair<const segre::ParsedFile*, std::string> resolve(
        const std::string& ref) {
        size_t colon = ref.rfind(':');
        std::string base = colon == std::string::npos ? ref : ref.substr(0, colon);
        std::string decl = colon == std::string::npos ? "" : ref.substr(colon + 1);
        return {&load(base), decl};
    }

    const segre::NormalHypersurface& hypersurface(const std::string& ref,
                                                  size_t slot) {
        auto [pf, decl] = resolve(ref);
        if (pf->hypersurfaces.empty())
            throw std::runtime_error("no hypersurface in '" + ref + "'");
        if (decl.empty()) {
            size_t idx = slot < pf->hypersurfaces.size() ? slot : 0;
            return pf->hypersurfaces[idx].m;
        }
        for (const auto& d : pf->hypersurfaces)
            if (d.name == decl) return d.m;
        throw std::runtime_error("no hypersurface named '" + decl + "' in '" +
                                 ref + "'");
    }

    const segre::SegreMap& map(const std::string& ref) {
        auto [pf, decl] = resolve(ref);
        if (pf->maps.empty())
            throw std::runtime_error("no map in '" + ref + "'");
        if (decl.empty()) return pf->maps[0].h;
        for (const auto& d : pf->maps)
            if (d.name == decl) return d.h;
        throw std::runtime_error("no map named '" + decl + "' in '" + ref + "'");
    }

private:
    const Options& opt_;
    std::map<std::string, segre::ParsedFile> cache_;
};

void emit(const Options& opt, const Json& report) {
    if (opt.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << segre::renderText(report);
}

int cmdClassify(const Options& opt, const std::string& mRef) {
    FileCache files(opt);
    const segre::NormalHypersurface& m = files.hypersurface(mRef, 0);
    Json j;
    j["command"] = "classify";
    j["input"] = mRef;
    j["n"] = m.n();
    j["order"] = m.order();
    j["seed"] = opt.seed;
    j["q"] = m.q().str();
    j["normal"] = toJson(m.validateNormal());
    j["reality"] = toJson(m.validateReality());
    j["classification"] = toJson(segre::classify(m, opt.seed));
    emit(opt, j);
    return 0;
}

int cmdVerify(const Options& opt, const std::string& mRef,
              const std::string& mpRef, const std::string& hRef) {
    FileCache files(opt);
    const segre::NormalHypersurface& m = files.hypersurface(mRef, 0);
    const segre::NormalHypersurface& mp = files.hypersurface(mpRef, 1);
    const segre::SegreMap& h = files.map(hRef);
    segre::Verdict verify = segre::verifyHspm(m, mp, h);
    Json j;
    j["command"] = "verify";
    j["order"] = h.order();
    j["seed"] = opt.seed;
    j["verify"] = toJson(verify);
    j["normality"] = toJson(segre::normalityConsequences(h));
    j["transversal"] = toJson(segre::isSegreTransversal(h));
    j["transversally_null"] = toJson(segre::isTransversallyNull(h));
    j["nondegeneracy"] = toJson(segre::segreNondegeneracy(h));
    j["maps_into_target"] = toJson(segre::mapsIntoTarget(mp, h));
    j["jacobian_rank_at_0"] = segre::jacobianRankAt0(h);
    j["jacobian_generic_rank"] =
        toJson(segre::jacobianGenericRank(h, opt.seed));
    emit(opt, j);
    if (!verify.isProved()) {
        std::cerr << "verify: " << verify.str() << "\n";
        return 1;
    }
    return 0;
}

int cmdAudit(const Options& opt, const std::string& mRef,
             const std::string& mpRef, const std::string& hRef) {
    FileCache files(opt);
    const segre::NormalHypersurface& m = files.hypersurface(mRef, 0);
    const segre::NormalHypersurface& mp = files.hypersurface(mpRef, 1);
    const segre::SegreMap& h = files.map(hRef);
    Json j;
    j["command"] = "audit";
    j["seed"] = opt.seed;
    j["report"] = toJson(segre::audit(m, mp, h, opt.seed));
    emit(opt, j);
    return 0;
}

int cmdComplexify(const Options& opt, const std::string& ref) {
    FileCache files(opt);
    auto [pf, decl] = files.resolve(ref);
    const segre::HypersurfaceDecl* chosen = nullptr;
    for (const auto& d : pf->hypersurfaces) {
        if (!decl.empty() ? d.name == decl : d.imw.has_value()) {
            chosen = &d;
            break;
        }
    }
    if (!chosen && decl.empty() && !pf->hypersurfaces.empty())
        chosen = &pf->hypersurfaces[0];
    if (!chosen)
        throw std::runtime_error("no matching hypersurface in '" + ref + "'");
    Json j;
    j["command"] = "complexify";
    j["name"] = chosen->name;
    j["order"] = chosen->m.order();
    if (chosen->imw) j["imw"] = chosen->imw->phi().str();
    j["q"] = chosen->m.q().str();
    j["normal"] = toJson(chosen->m.validateNormal());
    j["reality"] = toJson(chosen->m.validateReality());
    emit(opt, j);
    return 0;
}

int cmdCorpus(const Options& opt) {
    std::vector<segre::CorpusRun> runs =
        segre::runCorpusDir(opt.corpusDir, opt.order, opt.seed);
    Json j;
    j["command"] = "corpus";
    j["seed"] = opt.seed;
    Json entries = Json::array();
    bool allPass = true;
    std::string firstFailure;
    for (const segre::CorpusRun& run : runs) {
        entries.push_back(toJson(run));
        for (const segre::CorpusCheck& c : run.checks)
            if (!c.pass && firstFailure.empty())
                firstFailure = run.name + ": " + c.key + " expected '" +
                               c.expected + "' got '" + c.actual + "'";
        allPass = allPass && run.allPass;
    }
    j["entries"] = entries;
    j["all_pass"] = allPass;
    emit(opt, j);
    if (!allPass) {
        std::cerr << "corpus: first failing check: " << firstFailure << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic toolkit for hypersurfaces in normal "
                 "coordinates and Segre preserving maps"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    int orderFlag = 10;
    auto* orderOpt = app.add_option("--order", orderFlag,
                                    "truncation order K (default 10)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for the rank search");
    app.add_option("--corpus-dir", opt.corpusDir,
                   "directory of bundled .sgc entries");

    std::string mRef, mpRef, hRef, specRef;
    auto* classifyCmd =
        app.add_subcommand("classify", "classify one hypersurface");
    classifyCmd->add_option("M", mRef, "hypersurface (file or corpus name)")
        ->required();
    auto* verifyCmd = app.add_subcommand(
        "verify", "verify the membership identity and map properties");
    verifyCmd->add_option("M", mRef)->required();
    verifyCmd->add_option("Mp", mpRef)->required();
    verifyCmd->add_option("H", hRef)->required();
    auto* auditCmd =
        app.add_subcommand("audit", "audit all results on one instance");
    auditCmd->add_option("M", mRef)->required();
    auditCmd->add_option("Mp", mpRef)->required();
    auditCmd->add_option("H", hRef)->required();
    auto* complexifyCmd = app.add_subcommand(
        "complexify", "solve Im w = phi(z, zbar, Re w) for w = Q(z,chi,tau)");
    complexifyCmd->add_option("spec", specRef)->required();
    auto* corpusCmd = app.add_subcommand(
        "corpus", "run every bundled entry against its expectations");

    CLI11_PARSE(app, argc, argv);
    if (orderOpt->count() > 0) opt.order = orderFlag;

    try {
        if (app.got_subcommand(classifyCmd)) return cmdClassify(opt, mRef);
        if (app.got_subcommand(verifyCmd))
            return cmdVerify(opt, mRef, mpRef, hRef);
        if (app.got_subcommand(auditCmd))
            return cmdAudit(opt, mRef, mpRef, hRef);
        if (app.got_subcommand(complexifyCmd))
            return cmdComplexify(opt, specRef);
        if (app.got_subcommand(corpusCmd)) return cmdCorpus(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
