#ifndef MALFATTI_MALFATTI_HPP
#define MALFATTI_MALFATTI_HPP

#include "malfatti/closed_form.hpp"
#include "malfatti/construct.hpp"
#include "malfatti/errors.hpp"
#include "malfatti/geom.hpp"
#include "malfatti/json_io.hpp"
#include "malfatti/svg.hpp"
#include "malfatti/tangency_system.hpp"
#include "malfatti/triangle.hpp"
#include "malfatti/verify.hpp"

#endif
