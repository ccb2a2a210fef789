#pragma once

#include "superrsk/alphabet.hpp"
#include "superrsk/correspondences.hpp"
#include "superrsk/error.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/io.hpp"
#include "superrsk/littlewood_richardson.hpp"
#include "superrsk/matrix_ball.hpp"
#include "superrsk/shapes.hpp"
#include "superrsk/taquin.hpp"
