#ifndef OREHERMITE_OREHERMITE_HPP
#define OREHERMITE_OREHERMITE_HPP

#include "orehermite/common.hpp"
#include "orehermite/detform.hpp"
#include "orehermite/euclid.hpp"
#include "orehermite/hermite.hpp"
#include "orehermite/io.hpp"
#include "orehermite/linsolve.hpp"
#include "orehermite/matrix.hpp"
#include "orehermite/orepoly.hpp"
#include "orehermite/ratfun.hpp"
#include "orehermite/skewfrac.hpp"
#include "orehermite/upoly.hpp"

#endif
