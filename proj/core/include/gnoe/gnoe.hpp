#ifndef GNOE_GNOE_HPP
#define GNOE_GNOE_HPP

#include "gnoe/constructions.hpp"
#include "gnoe/error.hpp"
#include "gnoe/euclid.hpp"
#include "gnoe/ore_poly.hpp"
#include "gnoe/random.hpp"
#include "gnoe/report.hpp"
#include "gnoe/ring.hpp"
#include "gnoe/textio.hpp"
#include "gnoe/twist.hpp"
#include "gnoe/verify.hpp"

#endif  // GNOE_GNOE_HPP
