#include "segre/report.hpp"

#include <sstream>

namespace segre {

Json toJson(const Verdict& v) {
    Json j;
    j["status"] = statusName(v.status);
    j["witness"] = v.witness;
    j["order"] = v.order;
    return j;
}

Json toJson(const RankResult& r) {
    Json j;
    j["rank"] = r.rank;
    j["upper_certified"] = r.upperCertified;
    j["order"] = r.order;
    j["witness"] = r.witness;
    return j;
}

Json toJson(const ClassificationReport& r) {
    Json j;
    j["finite_type"] = toJson(r.finiteType);
    j["hol_nondeg"] = toJson(r.holNondeg);
    j["class_c"] = toJson(r.classC);
    j["ess_finite"] = toJson(r.essFinite);
    j["fin_nondeg"] = toJson(r.finNondeg);
    return j;
}

Json toJson(const NondegResult& r) {
    Json j;
    j["kind"] = nondegKindName(r.kind);
    j["det_fz"] = r.detFz.str();
    j["det_ftchi"] = r.detFtChi.str();
    j["f_det"] = toJson(r.fDet);
    j["ft_det"] = toJson(r.ftDet);
    return j;
}

Json toJson(const AuditReport& r) {
    Json j;
    j["membership"] = toJson(r.membership);
    j["source"] = toJson(r.source);
    j["target"] = toJson(r.target);
    Json entries = Json::array();
    for (const AuditEntry& e : r.entries) {
        Json je;
        je["name"] = e.name;
        je["hypotheses"] = toJson(e.hypotheses);
        je["conclusion"] = toJson(e.conclusion);
        je["branch"] = e.branch;
        entries.push_back(je);
    }
    j["entries"] = entries;
    return j;
}

Json toJson(const CorpusRun& r) {
    Json j;
    j["entry"] = r.name;
    j["order"] = r.order;
    j["all_pass"] = r.allPass;
    Json checks = Json::array();
    for (const CorpusCheck& c : r.checks) {
        Json jc;
        jc["key"] = c.key;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["pass"] = c.pass;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j;
}

namespace {

void renderLeaf(std::ostringstream& out, const std::string& path,
                const Json& j) {
    out << path << ": ";
    if (j.is_string())
        out << j.get<std::string>();
    else
        out << j.dump();
    out << "\n";
}

void renderRec(std::ostringstream& out, const std::string& path,
               const Json& j) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            renderRec(out, path.empty() ? it.key() : path + "." + it.key(),
                      it.value());
    } else if (j.is_array()) {
        int idx = 0;
        for (const Json& item : j)
            renderRec(out, path + "[" + std::to_string(idx++) + "]", item);
    } else {
        renderLeaf(out, path, j);
    }
}

}  // namespace

std::string renderText(const Json& j) {
    std::ostringstream out;
    renderRec(out, "", j);
    return out.str();
}

}  // namespace segre
