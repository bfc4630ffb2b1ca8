#pragma once

#include <string>

#include <json.hpp>

#include "lagcorr/corralg.hpp"
#include "lagcorr/fockring.hpp"
#include "lagcorr/gwdt.hpp"
#include "lagcorr/hseries.hpp"
#include "lagcorr/partitions.hpp"
#include "lagcorr/qlaurent.hpp"
#include "lagcorr/qrational.hpp"
#include "lagcorr/tropical.hpp"

// Exact JSON interchange. Scalars are strings ("a/b", "a/b+c/d*i") and every
// decoder throws Error(Parse) naming the offending field.
namespace lagcorr::json_io {

using Json = nlohmann::ordered_json;

/// Parse text; syntax errors report the byte offset.
Json parse(const std::string& text, const std::string& source = "input");
Json read_file(const std::string& path);

Json encode(const GaussianRational& x);
GaussianRational decode_scalar(const Json& j);

/// [[half_exponent, "re", "im"], ...]
Json encode(const QLaurent& x);
QLaurent decode_laurent(const Json& j);

/// {"terms": [...], "order": N, "certified_finite": bool}
Json encode(const QSeries& x);
QSeries decode_qseries(const Json& j);

/// {"terms": [[e, "re", "im"], ...], "truncation_order": N}
Json encode(const HSeries& x);
HSeries decode_hseries(const Json& j);

Json encode(const QRational& x);
QRational decode_qrational(const Json& j);

Json encode(const Partition& x);
Partition decode_partition(const Json& j);

Json encode(const IntVector& x);
IntVector decode_vector(const Json& j);

/// [{"v": [...], "mult": k}, ...]
Json encode(const ContactData& x);
ContactData decode_contact(const Json& j);

/// {"dots": [{"v": [...], "dot": k}], "energy": "E"}
Json encode(const CurveClass& x);
CurveClass decode_curve_class(const Json& j);

Json encode(const ObjectId& x);
ObjectId decode_object(const Json& j);

/// {"name": "Delta", "mu": [2,1]} or {"name": "IdHilb", "n": 3}
Json encode(const Generator& x);
Generator decode_generator(const Json& j);

Json encode(const Corr& x);
Corr decode_corr(const Json& j);

Json encode(const RelationTable& x);
RelationTable decode_table(const Json& j);

Json encode(const FockElement& x);
FockElement decode_fock(const Json& j);

Json encode(const PairingTable& x);
PairingTable decode_pairing(const Json& j);

Json encode(const IntegralityReport& x);
Json encode(const UnitarityReport& x);

}  // namespace lagcorr::json_io
