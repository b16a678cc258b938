#pragma once

// Integer criterion for monomial integral closure, independent of any LP:
// x^v is integral over I^n iff x^{kv} lies in I^{nk} for some k >= 1. The
// search stops at k = kMaxMultiplier.

#include <algorithm>
#include <vector>

namespace icl::testing {

inline constexpr int kMaxMultiplier = 24;

class PowerOracle {
  public:
    using Vec = std::vector<int>;

    PowerOracle(std::vector<Vec> gens, int n, int max_k = kMaxMultiplier) : n_(n), max_k_(max_k)
    {
        base_ = antichain(std::move(gens));
        powers_.push_back({Vec(base_.empty() ? 0 : base_.front().size(), 0)});
        for (int j = 1; j <= n * max_k; ++j) {
            std::vector<Vec> next;
            for (const auto& a : powers_.back())
                for (const auto& b : base_) {
                    Vec c(a.size());
                    for (std::size_t i = 0; i < a.size(); ++i)
                        c[i] = a[i] + b[i];
                    next.push_back(std::move(c));
                }
            powers_.push_back(antichain(std::move(next)));
        }
    }

    bool integral(const Vec& v) const
    {
        for (int k = 1; k <= max_k_; ++k) {
            Vec kv(v.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                kv[i] = k * v[i];
            for (const auto& g : powers_[static_cast<std::size_t>(n_ * k)])
                if (le(g, kv))
                    return true;
        }
        return false;
    }

    /* Minimal generators of the closure inside the box [0, bound]^d. */
    std::vector<Vec> closure(int bound) const
    {
        const std::size_t d = base_.front().size();
        std::vector<Vec> members;
        Vec cur(d, 0);
        for (;;) {
            if (integral(cur))
                members.push_back(cur);
            std::size_t i = 0;
            while (i < d && cur[i] == bound)
                cur[i++] = 0;
            if (i == d)
                break;
            ++cur[i];
        }
        auto out = antichain(members);
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    static bool le(const Vec& a, const Vec& b)
    {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i])
                return false;
        return true;
    }

    static std::vector<Vec> antichain(std::vector<Vec> v)
    {
        auto total = [](const Vec& a) {
            int s = 0;
            for (int e : a)
                s += e;
            return s;
        };
        std::sort(v.begin(), v.end(), [&](const Vec& a, const Vec& b) {
            int sa = total(a), sb = total(b);
            return sa != sb ? sa < sb : a < b;
        });
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::vector<Vec> out;
        for (auto& x : v) {
            bool keep = true;
            for (const auto& y : out)
                if (le(y, x)) {
                    keep = false;
                    break;
                }
            if (keep)
                out.push_back(std::move(x));
        }
        return out;
    }

  private:
    int n_;
    int max_k_;
    std::vector<Vec> base_;
    std::vector<std::vector<Vec>> powers_;
};

} // namespace icl::testing
