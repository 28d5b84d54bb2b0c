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


from __future__ import annotations

import json
import os
from typing import Any

from . import ConfigError


def loadJsonFile(filePath: str | os.PathLike) -> Any:
    """
    Load and parse a JSON file, turning any failure into a ConfigError
    that names the file.
    """
    try:
        with open(filePath, 'r', encoding='utf-8') as f:
            return json.load(f)
    except OSError as e:
        raise ConfigError(f'Cannot read "{filePath}": {e.strerror}') from e
    except json.JSONDecodeError as e:
        raise ConfigError(f'"{filePath}" is not valid JSON ({e.msg}, line {e.lineno})') from e


def dumpJson(obj: Any) -> str:
    """
    Serialize obj the way every hausdorffpy file is written. Float
    reprs round-trip exactly, so saving and reloading is lossless.
    """
    return json.dumps(obj, indent=4) + '\n'


def saveTextToFile(text: str, filePath: str | os.PathLike) -> None:
    with open(filePath, 'w', encoding='utf-8') as f:
        f.write(text)


def requireField(d: Any, name: str, context: str) -> Any:
    """
    Return d[name], raising a ConfigError that names the field if d
    isn't a JSON object or the field is missing.
    """
    if not isinstance(d, dict):
        raise ConfigError(f'{context} must be a JSON object')
    if name not in d:
        raise ConfigError(f'{context} is missing the "{name}" field')
    return d[name]


def requireInt(value: Any, context: str) -> int:
    # bool is an int subclass, but true/false are never valid integers here
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigError(f'{context} must be an integer (found {value!r})')
    return value


def complexFromJson(d: Any, context: str) -> complex:
    """
    Read a {"re": ..., "im": ...} pair. "im" may be omitted.
    """
    re = requireField(d, 're', context)
    im = d.get('im', 0.0)
    for part, value in (('re', re), ('im', im)):
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ConfigError(f'{context}: "{part}" must be a number (found {value!r})')
    return complex(float(re), float(im))


def complexToJson(value: complex) -> dict:
    return {'re': value.real, 'im': value.imag}


def formatComplex(value: complex) -> str:
    """
    Short human-readable form of a coefficient, for __str__ methods.
    """
    if value.imag == 0:
        return f'{value.real:g}'
    if value.real == 0:
        return f'{value.imag:g}i'
    sign = '+' if value.imag >= 0 else '-'
    return f'{value.real:g}{sign}{abs(value.imag):g}i'
