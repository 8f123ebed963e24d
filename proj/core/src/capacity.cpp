#include "semifree/capacity.hpp"

namespace semifree {

CapacityRow capacities(const TFD& t) {
    CapacityRow r;
    r.label = t.label;
    auto lv = t.critical_levels();
    r.h_min = lv.front();
    r.h_max = lv.back();
    r.h_smin = lv.size() > 1 ? lv[1] : lv.front();
    if (t.params.spec.dim_min != 0) {
        r.status = "hypothesis not met";
        return r;
    }
    r.gromov_width = r.h_smin - r.h_min;
    r.hofer_zehnder = r.h_max - r.h_min;
    r.status = "ok";
    return r;
}

std::vector<CapacityRow> capacity_table(const std::vector<TFD>& rows) {
    std::vector<CapacityRow> out;
    for (const auto& t : rows)
        if (t.params.spec.dim_min == 0) out.push_back(capacities(t));
    return out;
}

} // namespace semifree
