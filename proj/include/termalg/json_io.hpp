#pragma once

#include <json.hpp>

#include <map>
#include <string>

#include "termalg/boolean.hpp"
#include "termalg/lll.hpp"
#include "termalg/probability.hpp"
#include "termalg/ring_terms.hpp"

namespace termalg {

using Json = nlohmann::json;

// Malformed documents raise PreconditionViolated (or ParseError for terms).

// {"kind":"ring","ring":"Z","source":..,"target":..,
//  "steps":[{"rule":"ET6","pos":[1],"dir":"fwd","r":"2","s":"3","u":"x1"}]}
Json to_json(const RingCertificate& c);
RingCertificate ring_certificate_from_json(const Json& j);

// {"kind":"bool","source":..,"target":..,"steps":[{"rule":"BT8","pos":[],"dir":"rev","u":..}]}
Json to_json(const BoolCertificate& c);
BoolCertificate bool_certificate_from_json(const Json& j);

// {"ring":"Z","flavor":"inf","terms":[{"exp":[2,0,1],"coef":"3"}]}
Json to_json(const StandardPolynomial& p);
StandardPolynomial polynomial_from_json(const Json& j);

struct SpaceFile {
    Fps space;
    std::map<std::string, Event> events;
};

// {"outcomes":["o1",..],"weights":["1/8",..],"events":{"a1":[0,3,5]}}
SpaceFile space_from_json(const Json& j);
Json to_json(const SpaceFile& s);

// {"vertices":6,"edges":[[0,1,2],[3,4,5]]}
Hypergraph hypergraph_from_json(const Json& j);
Json to_json(const Hypergraph& h);

Json to_json(const LllReport& r);

// Reads a whole file and parses it as JSON.
Json read_json_file(const std::string& path);

} // namespace termalg
