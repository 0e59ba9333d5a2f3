#include "gqd/state_json.hpp"

#include <fstream>

#include <json.hpp>

namespace gqd {

DensityMatrix load_state_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::InvalidArgument, "cannot open state file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::InvalidArgument, std::string("state file is not valid JSON: ") + e.what());
    }

    if (j.contains("amplitudes_re")) {
        const auto re = j["amplitudes_re"].get<std::vector<double>>();
        std::vector<double> im(re.size(), 0.0);
        if (j.contains("amplitudes_im")) im = j["amplitudes_im"].get<std::vector<double>>();
        if (im.size() != re.size())
            fail(Errc::InvalidArgument, "amplitude arrays differ in length");
        const auto n = re.size();
        if (n != 2 && n != 4 && n != 8 && n != 16)
            fail(Errc::InvalidArgument, "amplitude count must be one of 2, 4, 8, 16");
        std::vector<cplx> psi(n);
        for (std::size_t i = 0; i < n; ++i) psi[i] = cplx(re[i], im[i]);
        return validate_density(outer(psi));
    }

    if (!j.contains("dim") || !j.contains("re"))
        fail(Errc::InvalidArgument, "state file needs either dim/re[/im] or amplitudes_re[/...im]");
    const int d = j["dim"].get<int>();
    const auto re = j["re"].get<std::vector<std::vector<double>>>();
    std::vector<std::vector<double>> im(d, std::vector<double>(d, 0.0));
    if (j.contains("im")) im = j["im"].get<std::vector<std::vector<double>>>();
    if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d)
        fail(Errc::InvalidArgument, "matrix rows do not match dim");
    Mat m(d, d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(re[i].size()) != d || static_cast<int>(im[i].size()) != d)
            fail(Errc::InvalidArgument, "matrix columns do not match dim");
        for (int k = 0; k < d; ++k) m(i, k) = cplx(re[i][k], im[i][k]);
    }
    return validate_density(m);
}

}  // namespace gqd
