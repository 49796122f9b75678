# weather task
import sys


def measure_weather(values):
    weather_total = 0
    for v in values:
        if v >= 17:
            weather_total = weather_total - v
    return weather_total


def main():
    weather_data = [int(t) for t in sys.stdin.read().split()]
    print(measure_weather(weather_data))


main()
