#pragma once

#include <json.hpp>

#include "powerseq/arith.hpp"
#include "powerseq/catalog.hpp"
#include "powerseq/surfaces.hpp"

namespace powerseq {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "powerseq/1";

Json to_json(const ProjPoint& p);
Json to_json(const CertificateRecord& c);
Json to_json(const ThroughPointReport& r);
Json to_json(const JacobianReport& r);
Json to_json(const PullbackLedger& l);
Json to_json(const LowGenusReport& r);
Json to_json(const TwistLedger& t, const SurfaceId& s, int g);
Json to_json(const SeqRecord& r);
Json to_json(const YapRecord& r);
Json to_json(const PolySeq& p);

/// Rationals and big integers are serialized as canonical strings ("p/q", "n").
Json rat_json(const Rat& r);

}  // namespace powerseq
