#include "qhe/model.hpp"

#include <cmath>
#include <sstream>

#include "qhe/errors.hpp"

namespace qhe {

std::string_view to_string(Model model) {
    switch (model) {
    case Model::Lmg:
        return "lmg";
    case Model::Dicke:
        return "dicke";
    }
    return "unknown";
}

Model model_from_string(std::string_view name) {
    if (name == "lmg" || name == "LMG") return Model::Lmg;
    if (name == "dicke" || name == "Dicke") return Model::Dicke;
    throw ParameterError("unknown model '" + std::string(name) + "' (expected lmg or dicke)");
}

void ModelParams::validate() const {
    auto fail = [this](const std::string& what) {
        throw ParameterError(what + " in " + describe(*this));
    };
    if (n_particles < 1) fail("n_particles must be >= 1");
    if (!std::isfinite(omega0) || omega0 <= 0.0) fail("omega0 must be > 0");
    if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) fail("gamma must lie in [0, 1]");
    if (!std::isfinite(lambda) || lambda < 0.0) fail("lambda must be >= 0");
    if (model == Model::Dicke) {
        if (!std::isfinite(omega) || omega <= 0.0) fail("omega must be > 0");
        if (boson_cutoff < 1) fail("boson_cutoff must be >= 1");
    }
}

std::string describe(const ModelParams& params) {
    std::ostringstream os;
    os << to_string(params.model) << "(N=" << params.n_particles << ", omega0=" << params.omega0;
    if (params.model == Model::Dicke) os << ", omega=" << params.omega;
    os << ", gamma=" << params.gamma << ", lambda=" << params.lambda;
    if (params.model == Model::Dicke) os << ", cutoff=" << params.boson_cutoff;
    os << ")";
    return os.str();
}

} // namespace qhe
