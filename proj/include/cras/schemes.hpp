#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cras/model.hpp"

namespace cras::schemes {

enum class SchemeId { proposed, mmi, muc, mmslir, mds, single_antenna_pa };

inline const char* to_string(SchemeId id) {
    switch (id) {
        case SchemeId::proposed: return "proposed";
        case SchemeId::mmi: return "mmi";
        case SchemeId::muc: return "muc";
        case SchemeId::mmslir: return "mmslir";
        case SchemeId::mds: return "mds";
        case SchemeId::single_antenna_pa: return "sa-pa";
    }
    return "unknown";
}

inline SchemeId scheme_from_string(const std::string& name) {
    if (name == "proposed") return SchemeId::proposed;
    if (name == "mmi") return SchemeId::mmi;
    if (name == "muc") return SchemeId::muc;
    if (name == "mmslir") return SchemeId::mmslir;
    if (name == "mds") return SchemeId::mds;
    if (name == "sa-pa") return SchemeId::single_antenna_pa;
    throw std::invalid_argument("unknown scheme: " + name +
                                " (expected proposed|mmi|muc|mmslir|mds|sa-pa)");
}

namespace detail {

// antenna order by descending |h|^2, ties broken by lower index
inline std::vector<int> descending_order(const std::vector<double>& h_sq) {
    std::vector<int> order(h_sq.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&h_sq](int a, int b) {
        return h_sq[a] > h_sq[b];
    });
    return order;
}

// rank (1-based) of antenna `index` in the descending stable sort
inline int rank_of(const std::vector<double>& h_sq, int index) {
    int rank = 1;
    for (int j = 0; j < static_cast<int>(h_sq.size()); ++j) {
        if (h_sq[j] > h_sq[index] || (h_sq[j] == h_sq[index] && j < index))
            ++rank;
    }
    return rank;
}

inline bool feasible(const SystemParams& params, double g_sq) {
    return params.st_power * g_sq <= params.interference_threshold;
}

// wraps a candidate (0-based) in the halt-on-violation rule every modified
// scheme shares
inline SelectionOutcome guard(const SystemParams& params,
                              const ChannelRealization& ch, int candidate) {
    if (!feasible(params, ch.g_sq[candidate])) return SelectionOutcome::halt();
    return SelectionOutcome::selected(candidate + 1,
                                      rank_of(ch.h_sq, candidate));
}

}  // namespace detail

/// Proposed rule: walk the antennas in decreasing |h|^2 order and transmit
/// on the first one whose interference at the PR stays within the threshold;
/// halt when none qualifies.
inline SelectionOutcome select_proposed(const SystemParams& params,
                                        const ChannelRealization& ch) {
    const auto order = detail::descending_order(ch.h_sq);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const int i = order[pos];
        if (detail::feasible(params, ch.g_sq[i]))
            return SelectionOutcome::selected(i + 1,
                                              static_cast<int>(pos) + 1);
    }
    return SelectionOutcome::halt();
}

/// Modified minimum interference: candidate is argmin |g_i|^2.
inline SelectionOutcome select_mmi(const SystemParams& params,
                                   const ChannelRealization& ch) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(ch.g_sq.size()); ++i)
        if (ch.g_sq[i] < ch.g_sq[best]) best = i;
    return detail::guard(params, ch, best);
}

/// Modified unconstrained: candidate is argmax |h_i|^2.
inline SelectionOutcome select_muc(const SystemParams& params,
                                   const ChannelRealization& ch) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(ch.h_sq.size()); ++i)
        if (ch.h_sq[i] > ch.h_sq[best]) best = i;
    return detail::guard(params, ch, best);
}

/// Modified max signal-to-leak-interference ratio: candidate is
/// argmax |h_i|^2 / |g_i|^2. A zero |g_i|^2 counts as an infinite ratio.
inline SelectionOutcome select_mmslir(const SystemParams& params,
                                      const ChannelRealization& ch) {
    auto ratio = [&ch](int i) {
        if (ch.g_sq[i] == 0.0) return std::numeric_limits<double>::infinity();
        return ch.h_sq[i] / ch.g_sq[i];
    };
    int best = 0;
    double best_ratio = ratio(0);
    for (int i = 1; i < static_cast<int>(ch.h_sq.size()); ++i) {
        const double r = ratio(i);
        if (r > best_ratio) {
            best = i;
            best_ratio = r;
        }
    }
    return detail::guard(params, ch, best);
}

/// Modified difference selection: candidate is
/// argmax eta |h_i|^2 - (1 - eta) |g_i|^2 with eta from SystemParams.
inline SelectionOutcome select_mds(const SystemParams& params,
                                   const ChannelRealization& ch) {
    const double eta = params.ds_weight;
    auto score = [&](int i) {
        return eta * ch.h_sq[i] - (1.0 - eta) * ch.g_sq[i];
    };
    int best = 0;
    double best_score = score(0);
    for (int i = 1; i < static_cast<int>(ch.h_sq.size()); ++i) {
        const double s = score(i);
        if (s > best_score) {
            best = i;
            best_score = s;
        }
    }
    return detail::guard(params, ch, best);
}

inline SelectionOutcome select(SchemeId scheme, const SystemParams& params,
                               const ChannelRealization& ch) {
    switch (scheme) {
        case SchemeId::proposed: return select_proposed(params, ch);
        case SchemeId::mmi: return select_mmi(params, ch);
        case SchemeId::muc: return select_muc(params, ch);
        case SchemeId::mmslir: return select_mmslir(params, ch);
        case SchemeId::mds: return select_mds(params, ch);
        case SchemeId::single_antenna_pa:
            throw std::invalid_argument(
                "single_antenna_pa adapts power instead of selecting; use "
                "single_antenna_pa()");
    }
    throw std::invalid_argument("unknown scheme");
}

struct PowerAdaptationResult {
    double power = 0.0;
    double sinr = 0.0;
};

/// Single-antenna power adaptation baseline: antenna 1 only, transmit power
/// p = min(P_S, T / |g_1|^2). Never halts.
inline PowerAdaptationResult single_antenna_pa(const SystemParams& params,
                                               const ChannelRealization& ch) {
    PowerAdaptationResult result;
    if (ch.g_sq[0] == 0.0) {
        result.power = params.st_power;
    } else {
        result.power = std::min(params.st_power,
                                params.interference_threshold / ch.g_sq[0]);
    }
    result.sinr = result.power * ch.h_sq[0] /
                  (params.noise + params.pt_power * ch.h0_sq);
    return result;
}

}  // namespace cras::schemes
