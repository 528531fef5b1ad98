#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicolor {

// Dense vertex ids: id == arrival position, so transcripts replay byte for byte.
using vertex_id = std::uint32_t;

// ---- errors ---------------------------------------------------------------

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an insertion whose edges would close an odd cycle (invalid adversary move)
struct odd_cycle_error : error {
    using error::error;
};

struct unknown_vertex_error : error {
    using error::error;
};

struct uncolored_anchor_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

struct replay_mismatch_error : error {
    using error::error;
};

// a structural guarantee about a run failed to materialize; diagnostic, never silent
struct structure_violation_error : error {
    using error::error;
};

struct not_p9_free_error : structure_violation_error {
    using structure_violation_error::structure_violation_error;
};

struct extraction_error : structure_violation_error {
    using structure_violation_error::structure_violation_error;
};

struct budget_exhausted_error : error {
    using error::error;
};

struct solver_limit_error : error {
    using error::error;
};

// ---- colors ---------------------------------------------------------------

// three disjoint palettes; colors are written a1, b3, c2, ...
enum class palette : std::uint8_t { a = 0, b = 1, c = 2 };

inline char palette_letter(palette p) {
    switch (p) {
    case palette::a: return 'a';
    case palette::b: return 'b';
    default: return 'c';
    }
}

inline std::optional<palette> palette_from_letter(char ch) {
    switch (ch) {
    case 'a': return palette::a;
    case 'b': return palette::b;
    case 'c': return palette::c;
    default: return std::nullopt;
    }
}

// a palette letter plus a positive index
struct color_label {
    palette pal{palette::a};
    int index{1};

    friend auto operator<=>(const color_label&, const color_label&) = default;
};

inline color_label col_a(int i) { return {palette::a, i}; }
inline color_label col_b(int i) { return {palette::b, i}; }
inline color_label col_c(int i) { return {palette::c, i}; }

inline std::string to_string(const color_label& c) {
    return palette_letter(c.pal) + std::to_string(c.index);
}

// Assignment of labels to vertices. All processed vertices are assigned;
// the in-flight vertex is not.
class partial_coloring {
public:
    void ensure_size(std::size_t n) {
        if (assign_.size() < n) assign_.resize(n);
    }

    bool assigned(vertex_id v) const {
        return v < assign_.size() && assign_[v].has_value();
    }

    const color_label& at(vertex_id v) const {
        if (!assigned(v))
            throw uncolored_anchor_error("vertex " + std::to_string(v) + " is uncolored");
        return *assign_[v];
    }

    void set(vertex_id v, color_label c) {
        ensure_size(static_cast<std::size_t>(v) + 1);
        assign_[v] = c;
    }

    // index of the assigned color (any palette), 0 if unassigned
    int level(vertex_id v) const { return assigned(v) ? assign_[v]->index : 0; }

    std::size_t size() const { return assign_.size(); }

private:
    std::vector<std::optional<color_label>> assign_;
};

}  // namespace bicolor
