#pragma once

#include "morreykit/intervals.hpp"
#include "morreykit/lattice.hpp"
#include "morreykit/report.hpp"
#include "morreykit/weight.hpp"

namespace morreykit {

/// Window-restricted Muckenhoupt characteristic: the supremum over every
/// interval J inside the window, together with an interval attaining it.
struct ApCharacteristic {
  double p = 1.0;
  IndexInterval window;
  double value = 1.0;
  IndexInterval witness;
};

struct RhCharacteristic {
  double r = 2.0;
  IndexInterval window;
  double value = 1.0;
  IndexInterval witness;
};

// Witness ties are broken toward the shorter interval, then the one further
// to the right.

Weight power_weight(double beta);

/// sup_J avg_J(w) / min_J(w) over J inside the window.
ApCharacteristic a1_norm_window(const Weight& w, const IndexInterval& window, unsigned threads = 1);

/// sup_J avg_J(w) * avg_J(w^{-1/(p-1)})^{p-1}; requires p > 1.
ApCharacteristic ap_norm_window(const Weight& w, double p, const IndexInterval& window,
                                unsigned threads = 1);

/// A_1 for p == 1, A_p otherwise.
ApCharacteristic muckenhoupt_characteristic(const Weight& w, double p, const IndexInterval& window,
                                            unsigned threads = 1);

/// sup_J |J|^{1-1/r} (sum_J w^r)^{1/r} / sum_J w; requires r > 1.
RhCharacteristic rh_norm_window(const Weight& w, double r, const IndexInterval& window,
                                unsigned threads = 1);

/// w~(k) = w(|k|). A tabulated weight must cover 0; its nonnegative part is mirrored.
Weight reflect(const Weight& w);

/// Checks w(lambda S) <= ((3/2) K lambda)^p w(S), with K the averaging
/// constant of the window (A_p^{1/p}, or A_1 when p == 1).
VerificationReport doubling_bound_check(const Weight& w, double p, const SymmetricInterval& s,
                                        Index lambda, const IndexInterval& window,
                                        unsigned threads = 1);

}  // namespace morreykit
