"""Embed dynamically generated images into question stems.

The library takes raw bytes plus a media type and turns them into a
self-contained data-URI fragment; how the bytes are produced is up to
the script. With matplotlib installed this draws a random sine plot,
otherwise it falls back to a built-in 1x1 PNG so the demo always runs.
"""

import io
import random
from pathlib import Path

from quizbank import MediaAsset, QuestionBank, embed_image, render_preview

OUTPUT = Path(__file__).parent / "output"
OUTPUT.mkdir(exist_ok=True)

FALLBACK_PNG = (
    b"\x89PNG\r\n\x1a\n\x00\x00\x00\rIHDR\x00\x00\x00\x01\x00\x00\x00\x01"
    b"\x08\x06\x00\x00\x00\x1f\x15\xc4\x89\x00\x00\x00\nIDATx\x9cc\x00\x01"
    b"\x00\x00\x05\x00\x01\r\n-\xb4\x00\x00\x00\x00IEND\xaeB`\x82"
)

rng = random.Random(11)
frequency = rng.randint(2, 5)


def sine_plot_png(freq):
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        import numpy as np
    except ImportError:
        return FALLBACK_PNG
    xs = np.linspace(0, 2 * np.pi, 400)
    plt.figure(figsize=(4, 2.4))
    plt.plot(xs, np.sin(freq * xs))
    plt.grid(True)
    buffer = io.BytesIO()
    plt.savefig(buffer, format="png")
    plt.close()
    return buffer.getvalue()


img = embed_image(MediaAsset(sine_plot_png(frequency), "image/png", alt_text="a sine plot"))

Q = QuestionBank(OUTPUT / "media.xml", seed=11)
Q.setCategory("Signals")
Q.addMultipleChoice(
    "sine-frequency",
    f"The plot below shows \\( \\sin(kx) \\) over one period of x:<p>{img}<p>"
    "What is k?",
    [frequency] + [v for v in (2, 3, 4, 5) if v != frequency],
)
Q.close()

render_preview(Q, OUTPUT / "media.html")
print(f"bank: {Q.output_path}")
print(f"preview: {OUTPUT / 'media.html'} (image displays with no network)")
