// Umbrella header.
#pragma once

#include "algebra.hpp"
#include "derivation.hpp"
#include "dist.hpp"
#include "f2.hpp"
#include "hopf.hpp"
#include "lie.hpp"
#include "object.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "serialize.hpp"
#include "tangent.hpp"
#include "tensor.hpp"
