#include "cubictk/jacinv.hpp"

namespace ctk {

void require_invariant_characteristic(long ch) {
  if (ch == 2 || ch == 3) throw BadCharacteristic(ch);
}

}  // namespace ctk
