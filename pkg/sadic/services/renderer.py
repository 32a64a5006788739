"""
Renderer Service
ASCII glyph rows and binary P6 images of patterns, one pixel per cell
"""
import io
import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from PIL import Image

from sadic.errors import InvalidArgumentError, PaletteError
from sadic.models import Alphabet, RectPattern

logger = logging.getLogger(__name__)

RENDER_FORMATS = ('ascii', 'ppm')

Color = Tuple[int, int, int]


def default_palette(alphabet: Alphabet, max_value: int = 255) -> np.ndarray:
    """Evenly spaced grays by letter index: the first letter white, the last black"""
    count = len(alphabet)
    if count == 1:
        levels = np.array([max_value])
    else:
        levels = np.round(np.linspace(max_value, 0, count)).astype(int)
    return np.repeat(levels[:, np.newaxis], 3, axis=1).astype(np.uint8)


def _palette_array(alphabet: Alphabet, palette: Optional[Sequence[Color]], max_value: int) -> np.ndarray:
    if palette is None:
        return default_palette(alphabet, max_value)
    colors = np.array(palette, dtype=np.int64)
    if colors.ndim != 2 or colors.shape[1] != 3:
        raise PaletteError("palette entries must be (r, g, b) triples")
    if len(colors) < len(alphabet):
        raise PaletteError(f"palette has {len(colors)} colors for {len(alphabet)} letters")
    if colors.min() < 0 or colors.max() > max_value:
        raise PaletteError(f"palette values must lie in [0, {max_value}]")
    return colors.astype(np.uint8)


def to_image(p: RectPattern, palette: Optional[Sequence[Color]] = None, max_value: int = 255) -> Image.Image:
    """RGB image of p, top row first"""
    colors = _palette_array(p.alphabet, palette, max_value)
    return Image.fromarray(colors[p.cells[::-1]], 'RGB')


def render(p: RectPattern, fmt: str = 'ascii', palette: Optional[Sequence[Color]] = None,
           max_value: int = 255) -> bytes:
    if fmt == 'ascii':
        return p.to_text().encode('utf-8')
    if fmt == 'ppm':
        buffer = io.BytesIO()
        to_image(p, palette, max_value).save(buffer, format='PPM')
        logger.debug("Rendered %dx%d PPM", p.width, p.height)
        return buffer.getvalue()
    raise InvalidArgumentError(f"unknown format {fmt!r}, expected one of {RENDER_FORMATS}")
