#pragma once

#include "gridnull/error.hpp"
#include "gridnull/field.hpp"
#include "gridnull/grids.hpp"
#include "gridnull/nullity.hpp"
#include "gridnull/oracle.hpp"
#include "gridnull/poly.hpp"
#include "gridnull/report.hpp"
#include "gridnull/theorems.hpp"
