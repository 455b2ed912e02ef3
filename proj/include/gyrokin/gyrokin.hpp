#pragma once

#include "gyrokin/aberration.hpp"
#include "gyrokin/beta_vector.hpp"
#include "gyrokin/errors.hpp"
#include "gyrokin/gyrogroup.hpp"
#include "gyrokin/gyrotrigonometry.hpp"
#include "gyrokin/gyrovector_space.hpp"
#include "gyrokin/mass.hpp"
#include "gyrokin/tolerances.hpp"
