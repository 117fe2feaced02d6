#pragma once

#include "qmoment/aitken.hpp"
#include "qmoment/closedforms.hpp"
#include "qmoment/eigenseries.hpp"
#include "qmoment/errors.hpp"
#include "qmoment/hankel.hpp"
#include "qmoment/jacobi.hpp"
#include "qmoment/jsonio.hpp"
#include "qmoment/moments.hpp"
#include "qmoment/rankone.hpp"
#include "qmoment/rational.hpp"
#include "qmoment/render.hpp"
#include "qmoment/series.hpp"
#include "qmoment/sqrt2.hpp"
