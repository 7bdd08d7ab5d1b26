"""
SVG figures and text summaries rendered from the jinja2 templates in hwk/templates.
"""

import io
import os

import jinja2

TEMPLATES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'templates')

BAR_HEIGHT = 18
BAR_GAP = 6
LABEL_WIDTH = 220
HALF_WIDTH = 200
CELL_SIZE = 90


def load_template(template_name, autoescape=True):
    with io.open(os.path.join(TEMPLATES_DIR, template_name), 'r', encoding='utf-8') as f:
        template_content = f.read()

    return jinja2.Template(template_content, autoescape=autoescape)


def render(template_name, **variables):
    return load_template(template_name).render(**variables)


def bar_chart_svg(labels, values, title):
    """
    Horizontal bar chart of signed values around a centre line.

    Args:
        labels(list): bar labels, top to bottom
        values(list): signed values
        title(str): chart title

    Returns:
        str: SVG document
    """
    values = [float(v) for v in values]
    largest = max([abs(v) for v in values] + [1e-12])
    bars = []
    for position, (label, value) in enumerate(zip(labels, values)):
        width = HALF_WIDTH * abs(value) / largest
        bars.append({
            'label': label,
            'value': '{:.4f}'.format(value),
            'x': LABEL_WIDTH + HALF_WIDTH - (width if value < 0 else 0),
            'y': 30 + position * (BAR_HEIGHT + BAR_GAP),
            'width': width,
            'positive': value >= 0
        })
    return render(
        'bar_chart.svg',
        title=title,
        bars=bars,
        bar_height=BAR_HEIGHT,
        centre=LABEL_WIDTH + HALF_WIDTH,
        label_x=LABEL_WIDTH - 6,
        width=LABEL_WIDTH + 2 * HALF_WIDTH + 80,
        height=40 + len(bars) * (BAR_HEIGHT + BAR_GAP)
    )


def confusion_svg(matrix, labels, title):
    """
    Heatmap of a k x k confusion matrix, rows gold and columns predicted.

    Returns:
        str: SVG document
    """
    counts = [[int(c) for c in row] for row in matrix]
    largest = max([c for row in counts for c in row] + [1])
    cells = []
    for i, row in enumerate(counts):
        for j, count in enumerate(row):
            cells.append({
                'x': 100 + j * CELL_SIZE,
                'y': 60 + i * CELL_SIZE,
                'count': count,
                'shade': int(255 - 200 * float(count) / largest)
            })
    return render(
        'confusion_matrix.svg',
        title=title,
        labels=[str(label) for label in labels],
        cells=cells,
        cell_size=CELL_SIZE,
        width=140 + len(labels) * CELL_SIZE,
        height=100 + len(labels) * CELL_SIZE
    )


def save_figure(svg, path):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(svg)


def summary_text(title, sections):
    """
    Plain text summary.

    Args:
        title(str): heading
        sections(list): dicts with a 'heading' and 'items', a list of (key, value) pairs

    Returns:
        str: the summary
    """
    return load_template('summary.txt', autoescape=False).render(title=title, sections=sections)
