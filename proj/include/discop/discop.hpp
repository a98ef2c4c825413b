#pragma once

#include "discop/curves.hpp"
#include "discop/error.hpp"
#include "discop/image.hpp"
#include "discop/imagecurve.hpp"
#include "discop/kernels.hpp"
#include "discop/operators.hpp"
#include "discop/pbm.hpp"
#include "discop/specimens.hpp"
#include "discop/svg.hpp"
#include "discop/textio.hpp"
