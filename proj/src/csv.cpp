#include "gqd/csv.hpp"

#include <charconv>

namespace gqd {

std::string fmt12(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string dynamics_csv(const std::vector<SweepRow>& rows) {
    std::string out = "alpha,kappa_t,pair,dg1,dg2,concurrence,hierarchy_gap\n";
    for (const auto& r : rows) {
        out += fmt12(r.alpha);
        out += ',';
        out += fmt12(r.kappa_t);
        out += ',';
        out += pair_name(r.pair);
        out += ',';
        out += fmt12(r.dg1);
        out += ',';
        out += fmt12(r.dg2);
        out += ',';
        out += fmt12(r.concurrence);
        out += ',';
        out += fmt12(r.hierarchy_gap);
        out += '\n';
    }
    return out;
}

std::string classification_csv(const std::vector<ClassifyRow>& rows) {
    std::string out = "alpha,type,n_roots,root_1,root_2,revival_time\n";
    for (const auto& r : rows) {
        out += fmt12(r.alpha);
        out += ',';
        out += evolution_type_name(r.cls.type);
        out += ',';
        out += std::to_string(r.cls.roots.size());
        out += ',';
        if (!r.cls.roots.empty()) out += fmt12(r.cls.roots[0]);
        out += ',';
        if (r.cls.roots.size() > 1) out += fmt12(r.cls.roots[1]);
        out += ',';
        if (r.cls.revival) out += fmt12(r.cls.revival_time);
        out += '\n';
    }
    return out;
}

std::string monogamy_csv(const std::vector<MonogamyRow>& rows) {
    std::string out =
        "alpha,kappa_t,m3_g1,m3rho_g1,m4_g1,m3_g2,m3rho_g2,m4_g2,m3sq,m3sq_rho,m4sq\n";
    for (const auto& r : rows) {
        out += fmt12(r.alpha);
        out += ',';
        out += fmt12(r.kappa_t);
        for (double v : r.rep.columns()) {
            out += ',';
            out += fmt12(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace gqd
