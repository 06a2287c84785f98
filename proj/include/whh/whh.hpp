#pragma once

#include "whh/scalar.hpp"
#include "whh/linear_map.hpp"
#include "whh/tensor.hpp"
#include "whh/subspace.hpp"
#include "whh/report.hpp"
#include "whh/hom_structures.hpp"
#include "whh/weak_hom_hopf.hpp"
#include "whh/groups.hpp"
#include "whh/twist.hpp"
#include "whh/yd_category.hpp"
#include "whh/braiding_duality.hpp"
#include "whh/entwining.hpp"
#include "whh/qt_cqt.hpp"
#include "whh/instance_forge.hpp"
#include "whh/io.hpp"
