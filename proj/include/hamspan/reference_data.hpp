#ifndef HAMSPAN_REFERENCE_DATA_HPP
#define HAMSPAN_REFERENCE_DATA_HPP

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "hamspan/cycle_space.hpp"
#include "hamspan/errors.hpp"
#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/structure.hpp"

#ifndef HAMSPAN_FIXTURE_DIR
#define HAMSPAN_FIXTURE_DIR "fixtures"
#endif

namespace hamspan::reference {

// Circuits written with 1-based vertex names v1..vn, as digit strings.
inline std::vector<int> one_based_digits(const std::string& digits)
{
    std::vector<int> out;
    for (char c : digits) out.push_back(c - '1');
    return out;
}

// The six Hamilton circuits of the 7-vertex counterexample, in published order.
inline const std::vector<std::string>& ce_i1_circuits()
{
    static const std::vector<std::string> v{"1725634", "1763524", "1752436", "1672534", "1635724", "1653427"};
    return v;
}

// A basis of the cycle space of X made of Hamilton circuits, in published order.
inline const std::vector<std::string>& x7_circuits()
{
    static const std::vector<std::string> v{"1234756", "1234657", "1265743", "1265347",
                                            "1264753", "1264357", "1274653", "1726543"};
    return v;
}

inline CircuitSet circuits_from_digits(const Graph& g, const std::vector<std::string>& list)
{
    CircuitSet out;
    for (const auto& s : list) out.push_back(Circuit::make(g, one_based_digits(s)));
    return out;
}

// Chain matrix with one column per circuit and one row per edge (edge order of g).
inline GF2Matrix chain_matrix(const Graph& g, const CircuitSet& circuits)
{
    GF2Matrix m = GF2Matrix::from_columns(chains_of(g, circuits), static_cast<std::size_t>(g.size()));
    for (std::size_t j = 0; j < circuits.size(); ++j) m.column_labels.push_back("C" + std::to_string(j + 1));
    return m;
}

inline std::string fixture_dir()
{
    if (const char* env = std::getenv("HAMSPAN_FIXTURE_DIR"); env != nullptr && *env != '\0') return env;
    return HAMSPAN_FIXTURE_DIR;
}

inline GF2Matrix load_matrix(const std::string& name, const std::string& dir = fixture_dir())
{
    const std::string path = dir + "/" + name;
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture " + path);
    return read_matrix(in);
}

inline CBExpectation cb_expectation(CBVariant v, const std::string& dir = fixture_dir())
{
    switch (v) {
    case CBVariant::PrBoxtimes:
        return {load_matrix("pr_boxtimes_minor.gf2", dir), load_matrix("pr_boxtimes_inverse.gf2", dir)};
    case CBVariant::MBoxtimes:
        return {load_matrix("m_boxtimes_minor.gf2", dir), load_matrix("m_boxtimes_inverse.gf2", dir)};
    case CBVariant::PrBoxminus:
    case CBVariant::MBoxminus:
        return {load_matrix("boxminus_minor.gf2", dir), load_matrix("boxminus_inverse.gf2", dir)};
    }
    throw Error("unknown CB variant");
}

} // namespace hamspan::reference

#endif // HAMSPAN_REFERENCE_DATA_HPP
