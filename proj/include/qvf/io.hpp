#ifndef QVF_IO_HPP
#define QVF_IO_HPP

#include <json.hpp>

#include "qvf/hidden.hpp"
#include "qvf/rediscover.hpp"
#include "qvf/relations.hpp"
#include "qvf/spectra.hpp"
#include "qvf/twin.hpp"

namespace qvf {

/// All serialized output uses ordered_json so that emitted documents are
/// byte-stable across runs. Exact rationals travel as "p/q" strings,
/// never as floats; numeric complex values as [re, im] double pairs.
using json = nlohmann::ordered_json;

json to_json(const NormalFormField& v);
NormalFormField field_from_json(const json& j);

json to_json(const FiniteSpectra& s);
/// Accepts {"t": [...], "d": [...]} with three entries per list (the
/// fourth pair is derived through Euler-Jacobi) or four entries (then the
/// supplied values must satisfy the Euler-Jacobi relations exactly).
FiniteSpectra finite_spectra_from_json(const json& j);

json to_json(const InfinityData& s);
json to_json(const ExtendedSpectra& s);
json to_json(const RelationReport& r);
json to_json(const TwinReconstruction& r);
json to_json(const LambdaPrediction& p);

json recovered_to_json(const RecoveredH& h);
RecoveredH recovered_from_json(const json& j);

/// Strict parse front-end mapping nlohmann exceptions to parse_error.
json parse_json(const std::string& text);

} // namespace qvf

#endif
