#pragma once

// Standard and semistandard Young tableaux, restrictions, highest/lowest
// weight tableaux, one-/two-step tableaux, and complements.
//
// SYTs are stored as growth chains (the shape after each prefix of boxes),
// which makes content lookups O(1). SSYTs are stored as explicit fillings.
// Absent one-/two-step tableaux are values (std::nullopt), not errors: the
// matching Clebsch-Gordan coefficient is zero.

#include "partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace keyl {

struct StandardTableau {
    // chain[m] = shape (length d) spanned by boxes 1..m; chain[0] is empty.
    std::vector<std::vector<long>> chain;

    int n() const { return static_cast<int>(chain.size()) - 1; }
    int d() const { return static_cast<int>(chain.back().size()); }
    Partition shape() const { return Partition(chain.back()); }

    // 1-based row that received box m.
    int row_of(int m) const;
    // Content (column - row) of the cell holding m.
    long cont(int m) const;

    StandardTableau with_box(int row) const;
    // Rows of the explicit filling (for printing / JSON).
    std::vector<std::vector<int>> filling() const;

    bool operator==(const StandardTableau& o) const { return chain == o.chain; }
    std::string to_string() const;
};

StandardTableau empty_syt(int d);
std::vector<StandardTableau> enumerate_syt(const Partition& p);

struct Ssyt {
    int d = 0; // alphabet size
    std::vector<std::vector<int>> rows;

    long n() const;
    Partition shape_partition(int ambient) const;
    std::vector<long> shape() const;

    // Shape of the restriction to letters <= p (length p vector).
    std::vector<long> restrict_shape(int p) const;
    std::vector<long> weight() const;
    long columns() const { return rows.empty() ? 0 : static_cast<long>(rows[0].size()); }

    bool operator==(const Ssyt& o) const { return d == o.d && rows == o.rows; }
    bool operator<(const Ssyt& o) const;
    std::string to_string() const;
};

bool is_valid_ssyt(const Ssyt& t);

std::vector<Ssyt> enumerate_ssyt(const Partition& p, int d);

// Delete all boxes with letters greater than p.
Ssyt restrict_ssyt(const Ssyt& t, int p);

// Row i filled with the letter i.
Ssyt highest_weight(const Partition& p);
// The restriction to letters <= p has row lengths lambda_{d-p+i}.
Ssyt lowest_weight(const Partition& p, int d);

// Highest-weight tableau of shape p with one extra box: letter k appended to
// row i. Present iff i <= k and p + e_i is a valid diagram.
std::optional<Ssyt> one_step_tableau(const Partition& p, int d, int k, int i);

// Two extra boxes: k appended to row i and l appended to row j (boxes in the
// same row are kept sorted). Present iff the resulting filling is a valid
// SSYT. Symmetric: (k,l -> i,j) equals (l,k -> j,i).
std::optional<Ssyt> two_step_tableau(const Partition& p, int d, int k, int l, int i, int j);

// Complement within a d x m grid: the restriction chain of the result is the
// rowwise complement of the input's chain. Involution; maps lowest-weight
// tableaux to highest-weight tableaux of the complement shape.
Ssyt complement_ssyt(const Ssyt& t, long m);

// Rebuild a filling from its chain of restriction shapes (shape_at(p) must
// interlace as horizontal strips).
Ssyt ssyt_from_chain(const std::vector<std::vector<long>>& chain);

} // namespace keyl
