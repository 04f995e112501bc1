#pragma once

#include "qbps/errors.hpp"
#include "qbps/rational.hpp"
#include "qbps/ring.hpp"
#include "qbps/series.hpp"
#include "qbps/qforms.hpp"
#include "qbps/gw.hpp"
#include "qbps/conjecture.hpp"
#include "qbps/congruence.hpp"
