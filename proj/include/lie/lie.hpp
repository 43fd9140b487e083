#pragma once

#include "lie/affine.hpp"
#include "lie/character.hpp"
#include "lie/exact.hpp"
#include "lie/fundamental_group.hpp"
#include "lie/garland.hpp"
#include "lie/graded.hpp"
#include "lie/io.hpp"
#include "lie/loop.hpp"
#include "lie/matrix.hpp"
#include "lie/root_system.hpp"
#include "lie/weight.hpp"
