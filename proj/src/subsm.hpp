#pragma once

// Private minor view used by the recursive builders: deletions and
// contractions over the ambient ground set, no reindexing, so tree queries
// and certificate vertices keep their original indices.

#include <algorithm>
#include <vector>

#include "evasive/complex.hpp"
#include "evasive/semimatroid.hpp"

namespace evasive::detail {

struct SubSm {
    Face active = 0;
    std::vector<Face> faces;  // sorted, subsets of active
    std::vector<long long> rank;

    bool contains(Face f) const { return std::binary_search(faces.begin(), faces.end(), f); }

    long long rank_of(Face f) const {
        auto it = std::lower_bound(faces.begin(), faces.end(), f);
        return rank[it - faces.begin()];
    }

    long long srank() const {
        long long r = 0;
        for (long long v : rank) r = std::max(r, v);
        return r;
    }

    SubSm remove(int e) const {
        Face eb = face_bit(e);
        SubSm out;
        out.active = active & ~eb;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if ((faces[i] & eb) == 0) {
                out.faces.push_back(faces[i]);
                out.rank.push_back(rank[i]);
            }
        return out;
    }

    SubSm contract(int e) const {
        Face eb = face_bit(e);
        long long re = rank_of(eb);
        SubSm out;
        out.active = active & ~eb;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if ((faces[i] & eb) != 0) {
                out.faces.push_back(faces[i] & ~eb);
                out.rank.push_back(rank[i] - re);
            }
        return out;
    }

    ElementClass classify(int e) const {
        Face eb = face_bit(e);
        if (!contains(eb)) return ElementClass::nonface;
        if (rank_of(eb) == 0) return ElementClass::loop;
        long long rc = srank();
        bool in_all = true, any = false;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (rank[i] == rc && face_card(faces[i]) == rc) {
                any = true;
                if ((faces[i] & eb) == 0) { in_all = false; break; }
            }
        if (any && in_all) return ElementClass::coloop;
        return ElementClass::ordinary;
    }

    int pick(PivotStrategy strategy) const {
        auto elems = face_indices(active);
        switch (strategy) {
            case PivotStrategy::min_label:
                return elems.front();
            case PivotStrategy::max_label:
                return elems.back();
            case PivotStrategy::any_ordinary:
                for (int e : elems)
                    if (classify(e) == ElementClass::ordinary) return e;
                return elems.front();
        }
        return elems.front();
    }

    // faces containing no broken circuit, under the ambient index order
    std::vector<Face> nbc_faces() const {
        std::vector<Face> dependent;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (rank[i] < face_card(faces[i])) dependent.push_back(faces[i]);
        std::vector<Face> broken;
        for (Face c : dependent) {
            bool minimal = true;
            for (Face d : dependent)
                if (d != c && face_subset(d, c)) { minimal = false; break; }
            if (minimal) broken.push_back(c & (c - 1));  // drop lowest bit
        }
        std::vector<Face> out;
        for (Face f : faces) {
            bool keep = true;
            for (Face b : broken)
                if (face_subset(b, f)) { keep = false; break; }
            if (keep) out.push_back(f);
        }
        return out;
    }
};

inline SubSm sub_view(const Semimatroid& s) {
    return SubSm{s.ground().full_mask(), s.complex.faces, s.rank};
}

}  // namespace evasive::detail
