#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gri/coefficient_ring.hpp"
#include "gri/group_ring.hpp"
#include "gri/involutions.hpp"

namespace gri {

enum class SkewCase { None, Case1Abelian, Case2Slc };
enum class SymmetricCase { None, Abelian, Case1, Case2, Case3, Case4 };
enum class UnorientedSkewCase { None, AbelianIdentity, AbelianCharFour, UniqueCommutatorCharFour };

const char* to_string(SkewCase c);
const char* to_string(SymmetricCase c);
const char* to_string(UnorientedSkewCase c);

struct SkewPrediction {
  bool anticommutes = false;
  SkewCase matched_case = SkewCase::None;
};

struct SymmetricPrediction {
  bool commutes = false;
  SymmetricCase matched_case = SymmetricCase::None;
};

struct UnorientedSkewPrediction {
  bool anticommutes = false;
  UnorientedSkewCase matched_case = UnorientedSkewCase::None;
};

// Predicts whether (RG)^- anticommutes from group, involution and ring data
// alone. Requires a compatible config with a nontrivial orientation and a
// ring of characteristic other than 2.
//   case 1: char R = 4, G abelian, * is the identity on N, x* != x off N.
//   case 2: char R = 4, G SLC with * canonical, x* != x off N.
// Throws Error(IncompatibleConfig), Error(InvalidOrientation) or Error(CharTwoRing).
SkewPrediction classify_skew(const OrientedInvolutionConfig& cfg, const CoefficientRing& ring);

// Predicts whether (RG)^+ commutes. Abelian G always commutes; otherwise
//   case 1: R2^2 = 0, N abelian, x* = x off N, n* = a^-1 n a for all n in N, a off N.
//   case 2: char R = 4, N abelian, G' = {1, s}, x* = s x off N, same conjugation rule on N.
//   case 3: R2^2 = 0, N SLC with * canonical on N, some central a off N with a* = s a.
//   case 4: char R = 4, N and G SLC, * canonical on G and restricting to canonical on N.
// Cases are tried in this order and the first match is reported.
SymmetricPrediction classify_symmetric(const OrientedInvolutionConfig& cfg, const CoefficientRing& ring);

// The unoriented (sigma = 1) skew criterion:
//   G abelian with * = id; or char R = 4, G abelian, some s with s^2 = 1 and
//   g* in {g, sg}; or char R = 4, G' = {1, s} and g* in {g, sg}.
UnorientedSkewPrediction classify_skew_unoriented(const GroupInvolution& inv, const CoefficientRing& ring);

// Restriction of a compatible config's involution to the kernel N, as an
// involution of N in its own right.
GroupInvolution restrict_to_kernel(const OrientedInvolutionConfig& cfg);

struct QuestionResult {
  bool bruteforce = false;  // verdict of the spanning-set decider
  bool predicted = false;
  std::string matched_case;  // classifier case name, "none" when predicted false
  std::optional<std::string> witness;  // failing generator pair, when bruteforce is false
  std::size_t generator_count = 0;
  std::optional<bool> oracle;  // full-enumeration verdict, when it ran
  std::optional<std::size_t> oracle_set_size;
};

struct InstanceKey {
  std::string group;
  int involution = -1;      // index into involutions(G), -1 when unknown
  std::string involution_map;  // "g->g*" listing, always present
  std::string kernel;       // kernel labels, "{1,a^2,b,a^2b}"
  std::string ring;
  std::string to_string() const;
};

struct ClassificationReport {
  InstanceKey key;
  bool compatible = false;
  QuestionResult symmetric;
  QuestionResult skew;
  bool agreement = false;
  std::optional<std::string> error;  // set when the instance could not be evaluated
};

InstanceKey make_instance_key(const OrientedInvolutionConfig& cfg, const CoefficientRing& ring);

// Runs both spanning-set deciders and both classifiers. When the oracle
// budget is positive and |R|^|G| fits in it, the full-enumeration oracle runs
// too and agreement becomes three-way.
ClassificationReport verify_instance(const OrientedInvolutionConfig& cfg, const RingPtr& ring,
                                     std::uint64_t oracle_budget = 0);

struct SurveyOptions {
  std::uint64_t oracle_budget = 0;
  unsigned jobs = 1;
  // Called for each report in instance order as soon as all earlier ones are done.
  std::function<void(const ClassificationReport&)> on_report;
};

struct SurveySummary {
  std::size_t instances = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t errors = 0;
};

struct SurveyResult {
  std::vector<ClassificationReport> reports;  // deterministic instance order
  SurveySummary summary;
};

// Every compatible (involution, nontrivial orientation) pair of every group,
// crossed with every ring. Per-instance failures are recorded in the report
// row instead of aborting.
SurveyResult survey(const std::vector<GroupPtr>& groups, const std::vector<RingPtr>& rings,
                    const SurveyOptions& options = {});

}  // namespace gri
