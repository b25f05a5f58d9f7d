#pragma once

// Partitions (Young diagrams) of bounded length, their blocks, contents,
// hooks, complements, and the box-donation transformations.
//
// A partition always carries its ambient length d explicitly: all the
// transformations below depend on d, so d is part of the value.

#include "rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace keyl {

struct Partition {
    std::vector<long> rows; // length d, weakly decreasing, entries >= 0

    Partition() = default;
    explicit Partition(std::vector<long> r);

    int d() const { return static_cast<int>(rows.size()); }
    long n() const;
    int length() const; // number of positive rows
    long row(int i) const { return rows.at(i - 1); } // 1-based

    bool operator==(const Partition& o) const { return rows == o.rows; }
    bool operator!=(const Partition& o) const { return rows != o.rows; }
    bool operator<(const Partition& o) const { return rows < o.rows; }

    std::string to_string() const;
};

bool weakly_decreasing_nonneg(const std::vector<long>& v);

// All partitions of n with at most d rows, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(long n, int d);

// Maximal run of consecutive equal row lengths; 1-based inclusive indices.
// Trailing zero rows form a block of their own.
struct Block {
    int first = 0;
    int last = 0;
    int size() const { return last - first + 1; }
};

std::vector<Block> blocks(const Partition& p);

// Integer-valued row vectors of length d (entries may be negative).
using SignedShape = std::vector<long>;

// Every row gives a box to each strictly longer row above it and receives
// one from each strictly shorter row below it.
SignedShape donate(const Partition& p);

// Row i becomes lambda_i + d - 2i + 1 (every row donates to each row above).
SignedShape staircase(const Partition& p);

// Rows 1..r as in staircase, rows r+1..d pinned to -r. Requires length <= r.
SignedShape staircase_r(const Partition& p, int r);

// A spectrum f is legal for p when, on every block of p, its sum equals the
// block sum of donate(p).
bool is_legal(const Partition& p, const std::vector<Rat>& f);

// Content of the last box of row i: C_i = lambda_i - i (defined for all i).
long content_last(const Partition& p, int i);

// Hook length of cell (i, j), 1-based. Throws if the cell is outside p.
long hook(const Partition& p, int i, int j);

// mu_i = m - lambda_{d+1-i}; an involution. Requires m >= lambda_1.
Partition complement_partition(const Partition& p, long m);

// p + e_i when the result is a valid partition within d rows.
std::optional<Partition> add_box(const Partition& p, int i);

std::vector<long> parse_row_list(const std::string& csv);

} // namespace keyl
