#  torelli_toolkit
#  Copyright (C) 2018 the torelli_toolkit authors
#
#  This program is free software: you can redistribute it and/or modify
#  it under the terms of the GNU Affero General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU Affero General Public License for more details.
#
#  You should have received a copy of the GNU Affero General Public License
#  along with this program.  If not, see <http://www.gnu.org/licenses/>.

""" File formats. Only the shape is checked here; ids and genera are validated by the library types. """

from typing import List, Tuple

from pydantic import BaseModel, ConfigDict


class VertexSchema(BaseModel):
    model_config = ConfigDict(extra='forbid')

    id: str
    genus: int


class EdgeSchema(BaseModel):
    model_config = ConfigDict(extra='forbid')

    id: str
    ends: Tuple[str, str]


class GraphSchema(BaseModel):
    model_config = ConfigDict(extra='forbid')

    vertices: List[VertexSchema]
    edges: List[EdgeSchema] = []


class ComponentSchema(BaseModel):
    model_config = ConfigDict(extra='forbid')

    id: str
    genus: int
    iso_label: str
    points: List[str] = []
    symmetries: List[List[str]] = []


class CurveSchema(BaseModel):
    model_config = ConfigDict(extra='forbid')

    components: List[ComponentSchema]
    nodes: List[Tuple[str, str]] = []
