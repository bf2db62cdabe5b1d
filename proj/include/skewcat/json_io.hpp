#pragma once

#include <string>

#include "json.hpp"
#include "skewcat/closure.hpp"
#include "skewcat/linmap.hpp"
#include "skewcat/partition.hpp"
#include "skewcat/skew_ops.hpp"
#include "skewcat/subgroup.hpp"
#include "skewcat/verify.hpp"
#include "skewcat/word.hpp"

namespace skewcat {

using Json = nlohmann::ordered_json;

// Thrown when an input does not match the documented schemas; maps to CLI
// exit code 2.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Partition: {"upper":[ints],"lower":[ints]}, arbitrary labels, read through
// ker so any labelling is accepted and canonicalised.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// Word: [ints], reduced on read.
Json to_json(const Word& w);
Word word_from_json(const Json& j);

// BlockPairing: [[pBlockId,qBlockId],...].
Json to_json(const BlockPairing& pairing);
BlockPairing pairing_from_json(const Json& j);

// Oracle: {"type":"quotient","rank":n,"degree":m,"images":[[perm],...]} or
// {"type":"search","rank":n,"generators":[[...],...],"maxLength":L,
//  "maxDepth":D,"separating":{...optional quotient...}}.
Json to_json(const SubgroupOracle& oracle);
SubgroupOracle oracle_from_json(const Json& j);

// LinMap: {"n":n,"k":k,"l":l,"entries":[{"out":[..],"in":[..],"num":p,"den":q}]}.
Json to_json(const LinMap& m);
LinMap linmap_from_json(const Json& j);

// Closure request/response:
// {"kind":"skew","generators":[...],"maxPoints":K,"maxBlocks":B?} ->
// {"elements":[...],"saturated":bool}.
struct ClosureRequest {
  ClosureKind kind = ClosureKind::Skew;
  std::vector<Partition> generators;
  ClosureBounds bounds;
};
ClosureRequest closure_request_from_json(const Json& j);
Json to_json(const ClosureTruncation& t);

Json to_json(const Report& r);

}  // namespace skewcat
