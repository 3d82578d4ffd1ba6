#pragma once

#include <optional>
#include <string>

#include "building/ball.hpp"
#include "building/link.hpp"
#include "building/region.hpp"
#include "pipeline/config.hpp"
#include "pipeline/report.hpp"
#include "shift/conditions.hpp"

namespace a2ck::pipeline {

// Sequences the stages build -> matrices -> verify -> ktheory, accumulating
// the verification report. Stages are cumulative and idempotent. A hard
// failure (count mismatch, truncation, bad datum) aborts the run and flags
// the partial report incomplete; check failures do not abort.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig cfg);

  // stage in {"build","matrices","verify","ktheory","report","all"};
  // "report"/"all" run everything. Returns the report exit code.
  int run(const std::string& stage);

  void run_build();
  void run_matrices();
  void run_verify();
  void run_ktheory();

  // Writes alphabet/matrix exports plus report.json and report.md into the
  // configured output directory.
  void export_artifacts();

  const PipelineConfig& config() const { return cfg_; }
  const VerificationReport& report() const { return report_; }
  const group::GroupEngine& engine() const { return *engine_; }
  const building::ChamberBall& ball() const { return *ball_; }
  const shift::Alphabet& tile_alphabet() const { return *tiles_; }
  const shift::Alphabet& hexagon_alphabet() const { return *hexes_; }
  const shift::ZeroOneMatrix& M(int j) const { return j == 1 ? *m1_ : *m2_; }
  const shift::ZeroOneMatrix& N(int j) const { return j == 1 ? *n1_ : *n2_; }
  bool loaded_ball_from_cache() const { return ball_from_cache_; }

 private:
  std::string fingerprint() const;
  int worker_count() const;

  PipelineConfig cfg_;
  VerificationReport report_;
  std::optional<group::GroupDatum> datum_;
  std::optional<group::GroupEngine> engine_;
  std::optional<building::ChamberBall> ball_;
  std::optional<building::VertexIndex> verts_;
  std::optional<shift::Alphabet> tiles_, hexes_;
  std::optional<shift::ZeroOneMatrix> m1_, m2_, n1_, n2_;
  bool ball_from_cache_ = false;
  bool ktheory_done_ = false;
  bool verify_done_ = false;
};

}  // namespace a2ck::pipeline
