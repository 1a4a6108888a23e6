#pragma once

#include <json.hpp>

#include "birkit/cartan.hpp"
#include "birkit/parse.hpp"
#include "birkit/spacefill.hpp"
#include "birkit/tate.hpp"
#include "birkit/wspace.hpp"

namespace birkit {

// All externally visible reports share one versioned JSON schema; keys appear
// in insertion order and runs with equal inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const Cx& z);
Json to_json(const std::vector<Cx>& v);
Json to_json(const GaussNorm& g, long long p);

Json to_json(const ConvergenceReport& r);
Json to_json(const RegionCertificate& c);
Json to_json(const Refutation& r);
Json to_json(const CartanVerdict& v);
Json to_json(const PadicGateVerdict& v, long long p);
Json to_json(const CloudResult& c, bool include_points = false);
Json to_json(const ObstructionReport& r);
Json to_json(const SmallSubgroupSample& s);
Json to_json(const SweepStats& s);

}  // namespace birkit
