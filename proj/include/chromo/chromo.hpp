#pragma once

#include "chromo/scalar.hpp"
#include "chromo/affine.hpp"
#include "chromo/metric.hpp"
#include "chromo/laws.hpp"
#include "chromo/centers.hpp"
#include "chromo/circle.hpp"
#include "chromo/verify.hpp"
#include "chromo/sweep.hpp"
#include "chromo/report.hpp"
#include "chromo/svg.hpp"
