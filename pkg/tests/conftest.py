# Copyright 2026 The hausdorffpy developers
#
# This file is part of hausdorffpy.
#
# hausdorffpy is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# hausdorffpy is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with hausdorffpy.  If not, see <https://www.gnu.org/licenses/>.
import os

from hypothesis import HealthCheck, settings


settings.register_profile(
    'default',
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow])

if 'CI' in os.environ:
    # CI runs get more examples
    settings.register_profile(
        'ci',
        deadline=None,
        max_examples=settings.default.max_examples * 5,
        suppress_health_check=[HealthCheck.too_slow])
    settings.load_profile('ci')
else:
    settings.load_profile('default')
