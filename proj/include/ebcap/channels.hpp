#pragma once

#include <vector>

#include "ebcap/qnum.hpp"

namespace ebcap {

// CPTP map as a list of dim_out x dim_in Kraus operators.
// Construction checks trace preservation: sum K_i^dag K_i = identity.
class KrausChannel {
 public:
  KrausChannel(int dim_in, int dim_out, std::vector<Matrix> kraus_ops);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus_ops() const { return kraus_; }

 private:
  int dim_in_;
  int dim_out_;
  std::vector<Matrix> kraus_;
};

// Choi state (id (x) ch)(|Phi><Phi|) on reference (x) output.
struct ChoiMatrix {
  DensityMatrix state;
  SubsystemDims dims;  // {dim_in, dim_out}
};

class MeasurePrepareChannel {
 public:
  MeasurePrepareChannel(std::vector<Matrix> povm,
                        std::vector<DensityMatrix> prep_states);

  const std::vector<Matrix>& povm() const { return povm_; }
  const std::vector<DensityMatrix>& prep_states() const { return prep_; }
  int dim_in() const { return static_cast<int>(povm_.front().rows()); }
  int dim_out() const { return prep_.front().dim(); }

 private:
  std::vector<Matrix> povm_;
  std::vector<DensityMatrix> prep_;
};

enum class EbStatus { Breaking, NotBreaking };

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

// Channel on one tensor factor, identity on the rest. The target factor
// dimension changes from ch.dim_in to ch.dim_out in the output layout.
DensityMatrix apply_on_factor(const KrausChannel& ch, const DensityMatrix& rho,
                              const SubsystemDims& dims, std::size_t target);

ChoiMatrix choi(const KrausChannel& ch);

// Reconstruction identity: apply(ch, rho) from the Choi state alone.
DensityMatrix apply_via_choi(const ChoiMatrix& c, const DensityMatrix& rho);

// Smallest eigenvalue of the partially transposed Choi state.
double choi_ppt_min_eigenvalue(const KrausChannel& ch);

// PPT test on the Choi state; decisive for qubit -> qubit only.
EbStatus is_entanglement_breaking_qubit(const KrausChannel& ch);

KrausChannel depolarizing(double eps);
KrausChannel identity_channel(int d);

KrausChannel measure_prepare_to_kraus(const MeasurePrepareChannel& mp);

}  // namespace ebcap
