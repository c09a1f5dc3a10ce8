#include "msl/spectra.hpp"

#include <algorithm>

namespace msl {

SpectrumValue lambda_at(const BiInfiniteSequence& seq, long i) {
    OneSidedWord fwd = seq.forward_from(i + 1);
    OneSidedWord bwd = seq.backward_from(i);
    SurdSum v = SurdSum(eval_periodic(seq.digit_at(i), fwd)) + SurdSum(eval_periodic(0, bwd));
    return SpectrumValue(v);
}

BiInfiniteSequence periodic_sequence(const FiniteWord& period, size_t phase) {
    if (period.empty()) throw std::invalid_argument("periodic_sequence: empty period");
    size_t n = period.size();
    auto at = [&](long j) { return period[static_cast<size_t>(((j % (long)n) + (long)n) % (long)n)]; };
    FiniteWord left, right;
    for (size_t t = 0; t < n; ++t) left.digits.push_back(at((long)phase - 1 - (long)t));
    for (size_t t = 0; t < n; ++t) right.digits.push_back(at((long)phase + 1 + (long)t));
    BiInfiniteSequence s;
    s.left = OneSidedWord(FiniteWord{}, left);
    s.core = FiniteWord{period[phase]};
    s.right = OneSidedWord(FiniteWord{}, right);
    return s;
}

namespace {

// Analysis of the left tail of `seq`: one entry per period phase describing
// how the lambdas at unscanned deep positions relate to the periodic limit.
std::vector<TailPhaseInfo> analyze_left_tail(const BiInfiniteSequence& seq, long window_lo,
                                             bool left_side_flag) {
    std::vector<TailPhaseInfo> out;
    long lpre = static_cast<long>(seq.left.preperiod.size());
    long per = static_cast<long>(seq.left.period.size());

    for (long phase = 0; phase < per; ++phase) {
        long i0 = -lpre - 1 - phase;  // shallowest position of this phase with pure backward word
        // periodic continuation block, read rightward from i0
        FiniteWord block;
        for (long t = 0; t < per; ++t) {
            long idx = ((phase - t) % per + per) % per;
            block.digits.push_back(seq.left.period[static_cast<size_t>(idx)]);
        }
        BiInfiniteSequence pseq = periodic_sequence(block, 0);

        TailPhaseInfo info;
        info.left_side = left_side_flag;
        info.phase = static_cast<size_t>(phase);
        info.periodic_value = lambda_at(pseq, 0).value;

        OneSidedWord fwd_seq = seq.forward_from(i0 + 1);
        OneSidedWord fwd_per = pseq.forward_from(1);
        auto delta = first_difference(fwd_seq, fwd_per);
        if (!delta) {
            info.approach = TailApproach::Pure;
            info.first_difference = 0;
            info.gap = Rational(0);
            out.push_back(info);
            continue;
        }
        // CF index of the first deviation for depth-m positions: delta+1 + m*per
        size_t cf0 = *delta + 1;
        info.first_difference = cf0;
        int d_seq = fwd_seq.digit_at(*delta);
        int d_per = fwd_per.digit_at(*delta);
        auto above_at = [&](long m) {
            size_t idx = cf0 + static_cast<size_t>(m) * static_cast<size_t>(per);
            return (idx % 2 == 0) == (d_seq > d_per);
        };
        if (per % 2 == 0) {
            info.approach = above_at(0) ? TailApproach::Above : TailApproach::Below;
        } else {
            info.approach = TailApproach::Alternating;
        }
        // smallest unscanned depth and the induced agreement bound
        long m_min = 0;
        while (i0 - m_min * per >= window_lo) ++m_min;
        size_t shared = static_cast<size_t>(m_min) * static_cast<size_t>(per) + *delta;
        info.gap = agreement_gap(fwd_per.prefix(shared));
        out.push_back(info);
    }
    return out;
}

struct ScanResult {
    SurdSum max_value;
    long attaining = 0;
    std::vector<long> tied;
};

// Exact max over scanned positions with the deterministic tie-break.
ScanResult scan_window(const BiInfiniteSequence& seq, long lo, long hi) {
    ScanResult r;
    bool first = true;
    for (long i = lo; i <= hi; ++i) {
        SurdSum v = lambda_at(seq, i).value;
        if (first) {
            r.max_value = v;
            r.tied = {i};
            first = false;
            continue;
        }
        int c = (v - r.max_value).sign();
        if (c > 0) {
            r.max_value = v;
            r.tied = {i};
        } else if (c == 0) {
            r.tied.push_back(i);
        }
    }
    auto better = [](long a, long b) {
        long aa = std::abs(a), ab = std::abs(b);
        if (aa != ab) return aa < ab;
        return a < b;
    };
    r.attaining = r.tied.front();
    for (long i : r.tied)
        if (better(i, r.attaining)) r.attaining = i;
    return r;
}

}  // namespace

MarkovResult markov_value(const BiInfiniteSequence& seq) {
    BiInfiniteSequence rev = seq.reversed();
    long core_len = static_cast<long>(seq.core.size());
    long lpre = static_cast<long>(seq.left.preperiod.size());
    long rpre = static_cast<long>(seq.right.preperiod.size());
    long perL = static_cast<long>(seq.left.period.size());
    long perR = static_cast<long>(seq.right.period.size());

    for (long K = 3; K <= 3 * 64; K *= 2) {
        long lo = -(lpre + K * perL);
        long hi = core_len - 1 + rpre + K * perR;
        ScanResult scan = scan_window(seq, lo, hi);

        std::vector<TailPhaseInfo> phases = analyze_left_tail(seq, lo, true);
        // right tail of seq = left tail of rev; rev position j is seq position -j
        for (auto& p : analyze_left_tail(rev, -hi, false)) phases.push_back(p);

        // candidate value: max of scanned sup and limit values approached from below
        SurdSum V = scan.max_value;
        bool limit_attained = false;
        for (const auto& p : phases) {
            bool below_like = p.approach == TailApproach::Below || p.approach == TailApproach::Alternating;
            if (below_like && (p.periodic_value - V).sign() > 0) {
                V = p.periodic_value;
                limit_attained = true;
            }
        }
        // domination of unscanned positions
        bool ok = true;
        for (const auto& p : phases) {
            switch (p.approach) {
                case TailApproach::Pure:
                    // deep lambdas equal the periodic value, which the scan saw
                    ok = (p.periodic_value - scan.max_value).sign() <= 0;
                    break;
                case TailApproach::Below:
                    ok = (p.periodic_value - V).sign() <= 0;
                    break;
                case TailApproach::Above:
                case TailApproach::Alternating: {
                    SurdSum bound = p.periodic_value + SurdSum(p.gap);
                    ok = (bound - V).sign() <= 0;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;

        MarkovResult res{SpectrumValue(V), {}};
        res.certificate.window_lo = lo;
        res.certificate.window_hi = hi;
        res.certificate.phases = std::move(phases);
        res.certificate.attained_in_limit = limit_attained;
        res.certificate.attaining_position = limit_attained ? 0 : scan.attaining;
        return res;
    }
    throw std::runtime_error("markov_value: certification did not stabilize");
}

bool replay_certificate(const BiInfiniteSequence& seq, const MarkovResult& result) {
    const MarkovCertificate& c = result.certificate;
    const SurdSum& V = result.value.value;

    ScanResult scan = scan_window(seq, c.window_lo, c.window_hi);
    if (c.attained_in_limit) {
        if ((scan.max_value - V).sign() >= 0) return false;  // limit must strictly dominate the scan
    } else {
        if ((scan.max_value - V).sign() != 0) return false;
        if (scan.attaining != c.attaining_position) return false;
    }

    BiInfiniteSequence rev = seq.reversed();
    auto recomputed = analyze_left_tail(seq, c.window_lo, true);
    for (auto& p : analyze_left_tail(rev, -c.window_hi, false)) recomputed.push_back(p);
    if (recomputed.size() != c.phases.size()) return false;
    bool limit_witness = false;
    for (size_t k = 0; k < recomputed.size(); ++k) {
        const auto& p = recomputed[k];
        const auto& q = c.phases[k];
        if (p.left_side != q.left_side || p.phase != q.phase || p.approach != q.approach) return false;
        if ((p.periodic_value - q.periodic_value).sign() != 0) return false;
        if (p.gap != q.gap) return false;
        switch (p.approach) {
            case TailApproach::Pure:
            case TailApproach::Below:
                if ((p.periodic_value - V).sign() > 0) return false;
                if ((p.periodic_value - V).sign() == 0) limit_witness = true;
                break;
            case TailApproach::Above:
            case TailApproach::Alternating:
                if ((p.periodic_value + SurdSum(p.gap) - V).sign() > 0) return false;
                if ((p.periodic_value - V).sign() == 0) limit_witness = true;
                break;
        }
    }
    if (c.attained_in_limit && !limit_witness) return false;
    return true;
}

LagrangeResult lagrange_value(const FiniteWord& period) {
    if (period.empty()) throw std::invalid_argument("lagrange_value: empty word");
    for (int d : period.digits)
        if (d != 1 && d != 2) throw std::invalid_argument("lagrange_value: digit outside {1,2}");
    SurdSum best;
    size_t best_phase = 0;
    for (size_t phase = 0; phase < period.size(); ++phase) {
        SurdSum v = lambda_at(periodic_sequence(period, phase), 0).value;
        if (phase == 0 || (v - best).sign() > 0) {
            best = v;
            best_phase = phase;
        }
    }
    return LagrangeResult{SpectrumValue(best), best_phase};
}

}  // namespace msl
