#ifndef HAMSPAN_GF2_HPP
#define HAMSPAN_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hamspan/errors.hpp"

namespace hamspan {

// Fixed-width bit vector over GF(2), packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    static BitVector from_string(const std::string& bits)
    {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') v.set(i);
            else if (bits[i] != '0') throw ParseError("bit string may only contain '0' and '1'");
        }
        return v;
    }

    static BitVector unit(std::size_t width, std::size_t i)
    {
        BitVector v(width);
        v.set(i);
        return v;
    }

    std::size_t width() const { return width_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value = true)
    {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (value) words_[i / 64] |= bit;
        else words_[i / 64] &= ~bit;
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitVector& operator^=(const BitVector& other)
    {
        if (other.width_ != width_) throw WidthMismatchError("bit vectors of different width");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool none() const
    {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    std::optional<std::size_t> lowest() const
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return std::nullopt;
    }
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < width_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }
    std::string to_string() const
    {
        std::string s(width_, '0');
        for (std::size_t i = 0; i < width_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    bool operator==(const BitVector& o) const { return width_ == o.width_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    bool operator<(const BitVector& o) const
    {
        if (width_ != o.width_) return width_ < o.width_;
        return to_string() < o.to_string();
    }

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

using EdgeVector = BitVector;

// Incremental row reduction. Every stored row has a distinct pivot (its lowest
// set bit) and remembers which inserted vectors it is the sum of.
class Eliminator {
public:
    Eliminator(std::size_t width, std::size_t capacity) : width_(width), capacity_(capacity), by_pivot_(width, -1) {}

    std::size_t rank() const { return rows_.size(); }

    struct Reduced {
        BitVector residue;
        BitVector combination;
    };

    // Reduces v against the stored rows; combination records the stored rows used.
    Reduced reduce(const BitVector& v) const
    {
        if (v.width() != width_) throw WidthMismatchError("vector width does not match the elimination width");
        Reduced r{v, BitVector(capacity_)};
        while (auto p = r.residue.lowest()) {
            const int row = by_pivot_[*p];
            if (row < 0) break;
            r.residue ^= rows_[static_cast<std::size_t>(row)];
            r.combination ^= combos_[static_cast<std::size_t>(row)];
        }
        return r;
    }

    // Inserts the vector with label index (< capacity). Returns true if it was independent.
    bool insert(const BitVector& v, std::size_t index)
    {
        Reduced r = reduce(v);
        r.combination.flip(index);
        auto p = r.residue.lowest();
        if (!p) return false;
        by_pivot_[*p] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(r.residue));
        combos_.push_back(std::move(r.combination));
        return true;
    }

    // Coefficients over the inserted labels expressing v, if v lies in the span.
    std::optional<BitVector> express(const BitVector& v) const
    {
        Reduced r = reduce(v);
        if (!r.residue.none()) return std::nullopt;
        return r.combination;
    }

private:
    std::size_t width_;
    std::size_t capacity_;
    std::vector<int> by_pivot_;
    std::vector<BitVector> rows_;
    std::vector<BitVector> combos_;
};

inline std::size_t common_width(const std::vector<BitVector>& vs, std::size_t fallback = 0)
{
    if (vs.empty()) return fallback;
    const std::size_t w = vs.front().width();
    for (const auto& v : vs)
        if (v.width() != w) throw WidthMismatchError("vectors of different width");
    return w;
}

inline std::size_t rank(const std::vector<BitVector>& vectors)
{
    const std::size_t w = common_width(vectors);
    Eliminator e(w, vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) e.insert(vectors[i], i);
    return e.rank();
}

// Indices of the greedy (lexicographically first) independent subset.
inline std::vector<std::size_t> independent_prefix_basis(const std::vector<BitVector>& vectors)
{
    const std::size_t w = common_width(vectors);
    Eliminator e(w, vectors.size());
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (e.insert(vectors[i], i)) picked.push_back(i);
    return picked;
}

// Coefficients c with sum c_i * gens_i == v, or nullopt when v is outside the span.
inline std::optional<BitVector> in_span(const BitVector& v, const std::vector<BitVector>& gens)
{
    const std::size_t w = common_width(gens, v.width());
    if (v.width() != w) throw WidthMismatchError("in_span: target width differs from generators");
    Eliminator e(w, gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) e.insert(gens[i], i);
    return e.express(v);
}

inline BitVector combine(const std::vector<BitVector>& gens, const BitVector& coefficients, std::size_t width)
{
    BitVector sum(width);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (coefficients.test(i)) sum ^= gens[i];
    return sum;
}

// Dense matrix over GF(2) with optional column labels.
struct GF2Matrix {
    std::vector<std::string> column_labels;
    std::vector<BitVector> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t column_count() const { return rows.empty() ? column_labels.size() : rows.front().width(); }
    bool at(std::size_t r, std::size_t c) const { return rows[r].test(c); }

    bool operator==(const GF2Matrix& o) const { return rows == o.rows; }
    bool operator!=(const GF2Matrix& o) const { return !(*this == o); }

    static GF2Matrix identity(std::size_t n)
    {
        GF2Matrix m;
        for (std::size_t i = 0; i < n; ++i) m.rows.push_back(BitVector::unit(n, i));
        return m;
    }

    static GF2Matrix from_strings(const std::vector<std::string>& rows)
    {
        GF2Matrix m;
        for (const auto& r : rows) m.rows.push_back(BitVector::from_string(r));
        common_width(m.rows);
        return m;
    }

    // Matrix whose j-th column is columns[j] (each of width row_count).
    static GF2Matrix from_columns(const std::vector<BitVector>& columns, std::size_t row_count)
    {
        GF2Matrix m;
        m.rows.assign(row_count, BitVector(columns.size()));
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (std::size_t i = 0; i < row_count; ++i)
                if (columns[j].test(i)) m.rows[i].set(j);
        return m;
    }

    GF2Matrix select_rows(const std::vector<std::size_t>& which) const
    {
        GF2Matrix m;
        m.column_labels = column_labels;
        for (auto i : which) m.rows.push_back(rows.at(i));
        return m;
    }

    std::vector<std::string> row_strings() const
    {
        std::vector<std::string> out;
        for (const auto& r : rows) out.push_back(r.to_string());
        return out;
    }
};

inline GF2Matrix multiply(const GF2Matrix& a, const GF2Matrix& b)
{
    if (a.column_count() != b.row_count()) throw ShapeError("multiply: inner dimensions differ");
    GF2Matrix c;
    for (const auto& row : a.rows) {
        BitVector out(b.column_count());
        for (std::size_t k = 0; k < row.width(); ++k)
            if (row.test(k)) out ^= b.rows[k];
        c.rows.push_back(out);
    }
    return c;
}

// Gauss-Jordan inverse of a square matrix, nullopt when singular.
inline std::optional<GF2Matrix> invert(const GF2Matrix& m)
{
    const std::size_t n = m.row_count();
    for (const auto& r : m.rows)
        if (r.width() != n) throw ShapeError("invert: matrix is not square");
    std::vector<BitVector> left = m.rows;
    std::vector<BitVector> right = GF2Matrix::identity(n).rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !left[pivot].test(col)) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(left[pivot], left[col]);
        std::swap(right[pivot], right[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && left[r].test(col)) {
                left[r] ^= left[col];
                right[r] ^= right[col];
            }
        }
    }
    GF2Matrix inv;
    inv.rows = std::move(right);
    return inv;
}

inline std::optional<GF2Matrix> invert_5x5(const GF2Matrix& m)
{
    if (m.row_count() != 5 || m.column_count() != 5) throw ShapeError("invert_5x5: expected a 5x5 matrix");
    return invert(m);
}

struct SplitResult {
    std::vector<BitVector> w_gens;
    // Coefficients of u0 over the input generators.
    BitVector u0_coefficients;
    // Indices of input generators that had bit b0 set and were replaced by gen + u0.
    std::vector<std::size_t> replaced;
};

// Splits span(U) = span(W) (+) <u0> where every element of W has bit b0 clear.
// Zero vectors produced by the replacement are dropped.
inline SplitResult direct_sum_split(const std::vector<BitVector>& u_gens, std::size_t b0, const BitVector& u0)
{
    const std::size_t w = common_width(u_gens, u0.width());
    if (u0.width() != w) throw WidthMismatchError("direct_sum_split: u0 width differs from generators");
    if (b0 >= w) throw PreconditionError("direct_sum_split: b0 outside the vector width");
    if (!u0.test(b0)) throw PreconditionError("direct_sum_split: bit b0 of u0 is 0");
    auto coeff = in_span(u0, u_gens);
    if (!coeff) throw NotInSpanError("direct_sum_split: u0 is not in the span of the generators");
    SplitResult out{{}, *coeff, {}};
    for (std::size_t i = 0; i < u_gens.size(); ++i) {
        BitVector g = u_gens[i];
        if (g.test(b0)) {
            g ^= u0;
            out.replaced.push_back(i);
        }
        if (!g.none()) out.w_gens.push_back(std::move(g));
    }
    return out;
}

// Text form: one header line of whitespace-separated column labels, then one
// row of '0'/'1' per line. Lines starting with '#' are comments.
inline void write_matrix(std::ostream& os, const GF2Matrix& m)
{
    for (std::size_t j = 0; j < m.column_labels.size(); ++j) os << (j ? " " : "") << m.column_labels[j];
    os << '\n';
    for (const auto& r : m.rows) os << r.to_string() << '\n';
}

inline GF2Matrix read_matrix(std::istream& is)
{
    GF2Matrix m;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (!header) {
            std::istringstream ss(line);
            std::string label;
            while (ss >> label) m.column_labels.push_back(label);
            header = true;
            continue;
        }
        if (line.empty()) continue;
        m.rows.push_back(BitVector::from_string(line));
        if (m.rows.back().width() != m.column_labels.size())
            throw ParseError("matrix row width does not match the number of column labels");
    }
    if (!header) throw ParseError("matrix text: missing column-label header");
    return m;
}

inline std::string matrix_to_string(const GF2Matrix& m)
{
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

} // namespace hamspan

#endif // HAMSPAN_GF2_HPP
