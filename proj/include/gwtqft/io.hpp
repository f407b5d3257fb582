#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gwtqft/frobenius.hpp"
#include "gwtqft/partition.hpp"
#include "gwtqft/series.hpp"
#include "gwtqft/symchar.hpp"
#include "gwtqft/tqft.hpp"

namespace gwtqft {

using Json = nlohmann::ordered_json;

/// {"order": N, "coeffs": ["1", "0", "1/12", ...]}
Json series_to_json(const Series& s);
/// Accepts fraction strings or integers; throws ParseError.
Series series_from_json(const Json& j);

/// {"rank", "order", "labels", "mult", "unit", "counit"}; mult is nested
/// [i][j][k] = m_{ij}^k.
Json algebra_to_json(const FrobeniusAlgebra& a);
FrobeniusAlgebra algebra_from_json(const Json& j);

Json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j);

Json character_table_to_json(const CharacterTable& table);

/// Rows "t^k : p/q" with the colons aligned; zero coefficients included.
std::string series_to_text(const Series& s);

/// Partition-labelled grid; rows are representations, columns classes.
std::string character_table_to_text(const CharacterTable& table);

/// Arity 0: the value. Arity 1: one row per label. Arity 2: a labelled
/// matrix. Higher arities: one "(a) (b) (c) : value" line per entry.
/// Entries are rendered by their constant term when every entry is
/// constant, otherwise as full series.
std::string tensor_to_text(const RelativeTensor& t);

}  // namespace gwtqft
