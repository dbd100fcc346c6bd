#pragma once

#include "mdi/linalg.hpp"
#include "mdi/model.hpp"
#include "mdi/states.hpp"
#include "mdi/dynamics.hpp"
#include "mdi/measures.hpp"
#include "mdi/sweep.hpp"
#include "mdi/io.hpp"
#include "mdi/verify.hpp"
