#include "rbd/cutpaste.hpp"

namespace rbd {

ClosedManifoldModel rational_blowdown(const BlowdownPlan& plan) {
    if (plan.ball.b2 != 0 || plan.ball.b1 != 0)
        throw HypothesisError("glued piece must be a rational ball: b1 = b2 = 0");
    if (plan.ambient.simply_connected && plan.ambient.b1 != 0)
        throw DomainError("simply connected model with b1 != 0");

    ClosedManifoldModel out = plan.ambient;
    out.e = plan.ambient.e - plan.piece.e + plan.ball.e;
    out.sigma = plan.ambient.sigma - plan.piece.sigma + plan.ball.sigma;
    out.assumptions = plan.ambient.assumptions;
    for (const auto& a : plan.assumptions) out.assumptions.push_back(a);
    return out;
}

std::string freedman_classify(const ClosedManifoldModel& m) {
    if (!m.simply_connected)
        throw HypothesisError("classification needs simple connectivity on record");
    Int k = m.e - 3;
    if (k >= 1 && m.sigma == 1 - k && m.parity == Parity::odd && m.b1 == 0)
        return "CP²#" + k.get_str() + "C̄P²";
    return "unrecognized";
}

Int sw_transfer(const Int& value, const BlowdownPlan& plan, const Int& d,
                bool restrictions_agree) {
    if (!plan.lspace_flag) throw HypothesisError("L-space hypothesis unmet");
    if (plan.boundary.h1_order == 0)
        throw HypothesisError("boundary H1 must be finite");
    if (plan.piece.b1 != 0) throw HypothesisError("piece must have b1 = 0");
    if (plan.ball.b1 != 0) throw HypothesisError("ball must have b1 = 0");
    if (plan.piece.sigma != -plan.piece.b2)
        throw HypothesisError("piece must be negative definite");
    if (plan.ball.b2 != 0)
        throw HypothesisError("ball must be a rational ball (negative definite, b2 = 0)");
    if (d < 0) throw HypothesisError("d >= 0 required");
    if (!restrictions_agree)
        throw HypothesisError("restrictions to the common piece must agree");
    return value;
}

bool characteristic_extension_check(const HomologyClass& K,
                                    const SphereConfiguration& cfg,
                                    const SphereConfiguration& ref_cfg) {
    if (!(cfg.graph == ref_cfg.graph))
        throw StructureError("configurations realize different graphs");
    if (!(K.lattice() == cfg.lattice))
        throw DimensionError("class over the wrong lattice");

    std::vector<Int> ones(static_cast<size_t>(ref_cfg.lattice.rank()), Int(1));
    HomologyClass k_ref(ref_cfg.lattice, std::move(ones));

    for (size_t i = 0; i < cfg.classes.size(); ++i)
        if (pair(K, cfg.classes[i]) != pair(k_ref, ref_cfg.classes[i]))
            return false;
    return true;
}

} // namespace rbd
