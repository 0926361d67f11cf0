// SPDX-License-Identifier: Apache-2.0
#include "relaysim/types.hpp"

namespace relaysim {

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::tb: return "tb";
        case Scheme::maxmin_as_bnc: return "maxmin";
        case Scheme::stbc_bnc: return "stbc";
    }
    return "unknown";
}

} // namespace relaysim
