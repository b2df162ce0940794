#include "velab/convergence.hpp"

#include <cmath>

#include "velab/diagnostics.hpp"
#include "velab/error.hpp"
#include "velab/sweep.hpp"
#include "velab/timeint.hpp"

namespace velab {

MmsLevel run_mms_level(int nx, const MmsStudyOptions& opt) {
    const Grid grid = build_grid(nx, nx + 1, opt.lx, opt.ly);
    const ManufacturedSolution mms = ManufacturedSolution::standard(opt.lx, opt.amplitude);
    const StateSnapshot init = mms.sample(0.0, grid);

    RunOptions ro;
    ro.cfl = opt.cfl;
    ro.forcing = &mms;
    ro.diagnostics = false;
    ro.bc.prescribed_top = [&mms](Component c, double t, double x, double y) { return mms.evaluate(c, t, x, y).val; };
    const RunResult res = run_simulation(init, grid, opt.params, BcMode::viscous, opt.t_end, {}, ro);

    const StateSnapshot exact = mms.sample(opt.t_end, grid);
    MmsLevel lv;
    lv.nx = grid.nx;
    lv.ny = grid.ny;
    lv.h = grid.h();
    lv.dt = res.dt;
    lv.steps = res.steps;
    for (Component c : kAllComponents)
        lv.l2_error[static_cast<int>(c)] = std::sqrt(l2_norm_sq(res.final_state[c] - exact[c], grid));
    return lv;
}

MmsStudy run_mms_study(const std::vector<int>& resolutions, const MmsStudyOptions& opt) {
    if (resolutions.size() < 2) throw ValidationError("mms: need at least two resolutions");
    MmsStudy st;
    for (int n : resolutions) st.levels.push_back(run_mms_level(n, opt));
    for (int c = 0; c < kNumComponents; ++c) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& lv : st.levels) pts.emplace_back(lv.h, lv.l2_error[c]);
        st.order[c] = fit_rate(pts);
    }
    return st;
}

}  // namespace velab
