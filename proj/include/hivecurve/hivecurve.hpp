#pragma once

#include "asymptotics.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "hermitian.hpp"
#include "hive.hpp"
#include "horn.hpp"
#include "hyperbolicity.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "patchwork.hpp"
#include "pencil.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "ronkin.hpp"
#include "simplex.hpp"
#include "subdivision.hpp"
#include "triangle.hpp"
#include "tropical.hpp"
