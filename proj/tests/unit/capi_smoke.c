/* Compiles as C to confirm the header is usable without C++. */
#include <stdio.h>

#include "swm/swm.h"

int main(void) {
  swm_signal* signal = NULL;
  swm_spectrum* spectrum = NULL;
  swm_dyad first;
  int ok = 0;

  if (swm_signal_synth(18, 4.0, -2.0, &signal) != SWM_OK) return 1;
  if (swm_analyze_signal(NULL, signal, &spectrum) != SWM_OK) return 1;
  if (swm_spectrum_dyad(spectrum, 0, &first) != SWM_OK) return 1;
  ok = first.frequency == 0.125 && first.coefficient > 117.1297 && first.coefficient < 117.1299;
  printf("first dyad: %.7f %.5f\n", first.frequency, first.coefficient);
  swm_spectrum_destroy(spectrum);
  swm_signal_destroy(signal);
  return ok ? 0 : 1;
}
