// Copyright 2026 The uplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UPLAB_SERIALIZE_HPP
#define UPLAB_SERIALIZE_HPP

#include <json.hpp>

#include "uplab/asymptotics.hpp"
#include "uplab/cyclic.hpp"
#include "uplab/mstransform.hpp"
#include "uplab/polyring.hpp"
#include "uplab/ramsey.hpp"

namespace uplab {

using Json = nlohmann::ordered_json;

Json distance_json(u64 q, int n, const std::string& gen, int dim, const DistanceResult& d);
Json to_json(const CyclicCode& code, const DistanceResult& d);
Json to_json(const DivisorRecord& r, u64 q, int n);
Json to_json(const MuRecord& m);
Json to_json(const StrongUpWitness& w);
Json to_json(const FFElem& x);
Json to_json(const MSVector& v);
Json to_json(const NaiveUpScan& s);
Json to_json(const RamseyResult& r);
Json to_json(const ApBound& b);
Json to_json(const GridBound& b);
Json to_json(const WeakUPRow& r);
Json to_json(const BallVolume& b);
Json to_json(const FAlpha& f);
Json to_json(const ConstructionReport& c);

}  // namespace uplab

#endif  // UPLAB_SERIALIZE_HPP
