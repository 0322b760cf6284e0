#pragma once

#include <map>

#include "hodgeprobe/kform.hpp"

namespace hodgeprobe {

using SparseVec = std::vector<std::pair<uint64_t, Scalar>>;

inline SparseVec sparse_axpy(const SparseVec& v, const Scalar& c, const SparseVec& w) {
    // v - c*w, both sorted by key
    SparseVec out;
    out.reserve(v.size() + w.size());
    auto it = v.begin();
    auto jt = w.begin();
    while (it != v.end() || jt != w.end()) {
        if (jt == w.end() || (it != v.end() && it->first < jt->first)) {
            out.push_back(*it++);
        } else if (it == v.end() || jt->first < it->first) {
            Scalar s = -(c * jt->second);
            if (!s.is_zero()) out.emplace_back(jt->first, std::move(s));
            ++jt;
        } else {
            Scalar s = it->second - c * jt->second;
            if (!s.is_zero()) out.emplace_back(it->first, std::move(s));
            ++it;
            ++jt;
        }
    }
    return out;
}

/// Incremental exact echelon span over sparse vectors keyed by bitmask.
/// Rows are kept fully reduced (Gauss-Jordan) with pivot coefficient 1 and
/// ordered by pivot key; dimension queries and membership are exact.
class FormSpan {
public:
    /// Reduces v against the span; inserts the residual if nonzero.
    /// Returns true when the dimension grew.
    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Scalar lead = v.front().second;
        if (!(lead == Scalar(1))) {
            Scalar inv = lead.inverse();
            for (auto& [m, c] : v) c *= inv;
        }
        uint64_t piv = v.front().first;
        // eliminate the new pivot from existing rows
        for (auto& [key, row] : rows_) {
            Scalar c = coeff_at(row, piv);
            if (!c.is_zero()) row = sparse_axpy(row, c, v);
        }
        rows_.emplace(piv, std::move(v));
        return true;
    }

    bool insert_form(const KForm& f) { return insert(SparseVec(f.terms())); }

    /// Eliminates every entry of v whose key is an existing pivot. Entries
    /// left of the eliminated key are untouched (rows only carry keys >=
    /// their pivot), so scanning left to right terminates.
    SparseVec reduce(SparseVec v) const {
        size_t idx = 0;
        while (idx < v.size()) {
            auto it = rows_.find(v[idx].first);
            if (it == rows_.end()) {
                ++idx;
                continue;
            }
            v = sparse_axpy(v, v[idx].second, it->second);
        }
        return v;
    }

    bool contains(SparseVec v) const {
        // full reduction: strip reducible leading keys until stuck or empty
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end()) return false;
            v = sparse_axpy(v, v.front().second, it->second);
        }
        return true;
    }
    bool contains_form(const KForm& f) const { return contains(SparseVec(f.terms())); }

    size_t dim() const { return rows_.size(); }
    const std::map<uint64_t, SparseVec>& rows() const { return rows_; }

    std::vector<KForm> basis_forms(int ambient, int degree) const {
        std::vector<KForm> out;
        for (const auto& [piv, row] : rows_) {
            KForm f(ambient, degree);
            for (const auto& [m, c] : row) f.set_coefficient(m, c);
            out.push_back(std::move(f));
        }
        return out;
    }

private:
    std::map<uint64_t, SparseVec> rows_;

    static Scalar coeff_at(const SparseVec& v, uint64_t key) {
        auto it = std::lower_bound(v.begin(), v.end(), key,
                                   [](const auto& t, uint64_t m) { return t.first < m; });
        if (it != v.end() && it->first == key) return it->second;
        return Scalar(0);
    }
};

} // namespace hodgeprobe
